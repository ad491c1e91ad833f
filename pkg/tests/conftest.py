"""Shared hypothesis strategies and deterministic test settings."""

import hypothesis.strategies as st
from hypothesis import settings, HealthCheck

from fockweyl.multirat import MultiPoly, MultiRat
from fockweyl.partitions import Partition
from fockweyl.ring import LaurentQ
from fockweyl.weights import Weight

settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("ci")

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def laurents(var="q", max_terms=4, max_exp=4):
    return st.dictionaries(
        st.integers(-max_exp, max_exp), small_fractions, max_size=max_terms
    ).map(lambda d: LaurentQ(d, var))


def nonzero_laurents(var="q"):
    return laurents(var).filter(lambda p: not p.is_zero)


def multipolys(rank=2, max_terms=3, max_exp=2):
    exps = st.tuples(*([st.integers(-max_exp, max_exp)] * (rank + 1)))
    return st.dictionaries(exps, small_fractions, max_size=max_terms).map(
        lambda d: MultiPoly(rank, d))


def multirats(rank=2):
    return st.builds(
        lambda n, d: MultiRat(n, d),
        multipolys(rank),
        multipolys(rank).filter(lambda p: not p.is_zero))


def weights(rank=2, bound=3):
    return st.tuples(*([st.integers(-bound, bound)] * rank)).map(Weight)


def partitions(max_size=8):
    return st.lists(st.integers(1, 5), max_size=4).map(
        lambda parts: Partition(sorted(parts, reverse=True))
    ).filter(lambda lam: lam.size <= max_size)
