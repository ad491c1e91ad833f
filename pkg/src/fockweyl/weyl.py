"""Finite-dimensional brute force: the quantum gl_N action on tensor powers of
the standard module, canonical highest weight vectors, the singular vectors of
(Weyl module) x (standard module) with their triangular normalization, and the
end-to-end comparison against the Fock-space operators.

Tensor words are tuples over 1..N; all coefficients are exact rational
functions in q.  The iterated coproduct is left-nested, which gives the flat
position formulas below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import itertools

from .errors import EngineError
from .fock import FockVector, apply_F
from .linalg import ff_echelon, kernel_basis
from .partitions import (Partition, Box, addable_row_indices, color, content,
                         n_left)
from .ring import LaurentQ, QFrac, poly_gcd, q_power, val_cyclotomic
from .verma import jantzen_evaluate_closed, hook_ratio


class TensorVector:
    """Exact linear combination of basis words of V^{(x)n}."""

    __slots__ = ("n", "rank", "terms")

    def __init__(self, n, rank, terms=None):
        self.n = n
        self.rank = rank
        t = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, QFrac):
                    c = QFrac(c) if isinstance(c, LaurentQ) else QFrac(LaurentQ({0: c}))
                if not c.is_zero:
                    t[tuple(w)] = c
        self.terms = t

    @classmethod
    def word(cls, w, rank) -> "TensorVector":
        return cls(len(w), rank, {tuple(w): QFrac.one()})

    @classmethod
    def zero(cls, n, rank) -> "TensorVector":
        return cls(n, rank)

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.n != other.n or self.rank != other.rank:
            raise ValueError("tensor length or rank mismatch")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w, QFrac.zero()) + c
            if s.is_zero:
                t.pop(w, None)
            else:
                t[w] = s
        out = TensorVector(self.n, self.rank)
        out.terms = t
        return out

    def __neg__(self):
        out = TensorVector(self.n, self.rank)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorVector":
        if not isinstance(c, QFrac):
            c = QFrac(c if isinstance(c, LaurentQ) else LaurentQ({0: c}))
        if c.is_zero:
            return TensorVector(self.n, self.rank)
        out = TensorVector(self.n, self.rank)
        out.terms = {w: co * c for w, co in self.terms.items()}
        return out

    def coeff(self, w) -> QFrac:
        return self.terms.get(tuple(w), QFrac.zero())

    def weight(self):
        """Letter-count weight, or None for a mixed-weight element."""
        wts = {_word_weight(w, self.rank) for w in self.terms}
        if len(wts) == 1:
            return next(iter(wts))
        return None

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return (self.n, self.rank, self.terms) == (other.n, other.rank, other.terms)

    def __repr__(self):
        if not self.terms:
            return "TensorVector(0)"
        bits = [f"({c}) v{list(w)}" for w, c in sorted(self.terms.items())]
        return "TensorVector(" + " + ".join(bits) + ")"


def _word_weight(w, rank):
    counts = [0] * rank
    for letter in w:
        counts[letter - 1] += 1
    return tuple(counts)


def tensor_act(gen: str, i: int, x: TensorVector) -> TensorVector:
    """Act by a generator through the left-nested iterated coproduct.

    gen is one of 'X', 'Y', 'L', 'Linv'.  On a single factor the actions are
    X_i v_{i+1} = v_i, Y_i v_i = v_{i+1}, L_i v_j = q^{delta_ij} v_j.
    """
    rank = x.rank
    if gen in ("L", "Linv"):
        if not 1 <= i <= rank:
            raise ValueError(f"L index {i} out of range")
        sgn = -1 if gen == "Linv" else 1
        out = TensorVector(x.n, rank)
        for w, c in x.terms.items():
            k = sum(1 for letter in w if letter == i)
            out.terms[w] = c * QFrac(q_power(sgn * k))
        return out
    if not 1 <= i <= rank - 1:
        raise ValueError(f"{gen} index {i} out of range for rank {rank}")
    out = TensorVector(x.n, rank)
    for w, c in x.terms.items():
        if gen == "X":
            for t, letter in enumerate(w):
                if letter != i + 1:
                    continue
                e = sum((1 if s == i else 0) - (1 if s == i + 1 else 0)
                        for s in w[t + 1:])
                nw = w[:t] + (i,) + w[t + 1:]
                _acc(out, nw, c * QFrac(q_power(e)))
        elif gen == "Y":
            for t, letter in enumerate(w):
                if letter != i:
                    continue
                e = sum((1 if s == i + 1 else 0) - (1 if s == i else 0)
                        for s in w[:t])
                nw = w[:t] + (i + 1,) + w[t + 1:]
                _acc(out, nw, c * QFrac(q_power(e)))
        else:
            raise ValueError(f"unknown generator {gen!r}")
    return out


def _acc(vec: TensorVector, w, c):
    s = vec.terms.get(w, QFrac.zero()) + c
    if s.is_zero:
        vec.terms.pop(w, None)
    else:
        vec.terms[w] = s


# Coproduct tables for the split-recursive action used by the coassociativity
# tests: Delta(g) = sum of (left symbol, right symbol) pairs.
_COPRODUCT = {
    "X": (("X", "K"), ("1", "X")),
    "Y": (("Y", "1"), ("Kinv", "Y")),
    "L": (("L", "L"),),
    "Linv": (("Linv", "Linv"),),
    "K": (("K", "K"),),
    "Kinv": (("Kinv", "Kinv"),),
    "1": (("1", "1"),),
}


def tensor_act_split(gen: str, i: int, x: TensorVector, split: int) -> TensorVector:
    """Same action computed by recursively splitting the tensor factors at
    `split`; any split point must agree with the flat formulas."""
    rank = x.rank
    if x.n == 0:
        if gen in ("L", "Linv", "K", "Kinv", "1"):
            return x
        return TensorVector(0, rank)
    if x.n == 1:
        out = TensorVector(1, rank)
        for (w,), c in x.terms.items():
            for nw, e in _single_action(gen, i, w, rank):
                _acc(out, (nw,), c * QFrac(q_power(e)))
        return out
    split = max(1, min(split, x.n - 1))
    out = TensorVector(x.n, rank)
    for pair in _COPRODUCT[gen]:
        gl, gr = pair
        # group terms by right part to act blockwise
        for w, c in x.terms.items():
            left = TensorVector(split, rank, {w[:split]: QFrac.one()})
            right = TensorVector(x.n - split, rank, {w[split:]: QFrac.one()})
            lv = tensor_act_split(gl, i, left, max(1, split // 2))
            if lv.is_zero:
                continue
            rv = tensor_act_split(gr, i, right, max(1, (x.n - split) // 2))
            if rv.is_zero:
                continue
            for wl, cl in lv.terms.items():
                for wr, cr in rv.terms.items():
                    _acc(out, wl + wr, c * cl * cr)
    return out


def _single_action(gen, i, letter, rank):
    if gen == "1":
        return [(letter, 0)]
    if gen == "X":
        return [(i, 0)] if letter == i + 1 else []
    if gen == "Y":
        return [(i + 1, 0)] if letter == i else []
    if gen == "L":
        return [(letter, 1 if letter == i else 0)]
    if gen == "Linv":
        return [(letter, -1 if letter == i else 0)]
    if gen == "K":
        e = (1 if letter == i else 0) - (1 if letter == i + 1 else 0)
        return [(letter, e)]
    if gen == "Kinv":
        e = (1 if letter == i else 0) - (1 if letter == i + 1 else 0)
        return [(letter, -e)]
    raise ValueError(f"unknown generator {gen!r}")


def tensor_form(x: TensorVector, y: TensorVector) -> QFrac:
    """Product contravariant form: diagonal on words, (v_k, v_k) = q^{1-k}."""
    x._check(y)
    total = QFrac.zero()
    small, big = (x.terms, y.terms) if len(x.terms) <= len(y.terms) else (y.terms, x.terms)
    for w, c1 in small.items():
        c2 = big.get(w)
        if c2 is None:
            continue
        e = sum(1 - letter for letter in w)
        total = total + c1 * c2 * QFrac(q_power(e))
    return total


def _weight_words(weight_counts, rank):
    """All words with the given letter counts, lexicographically."""
    counts = list(weight_counts)

    def rec(remaining):
        if all(c == 0 for c in remaining):
            yield ()
            return
        for i in range(rank):
            if remaining[i] > 0:
                remaining[i] -= 1
                for rest in rec(remaining):
                    yield (i + 1,) + rest
                remaining[i] += 1

    return list(rec(counts))


def _column_word(lam: Partition):
    """Row indices read down successive columns of the diagram."""
    out = []
    width = lam[0] if lam else 0
    for c in range(1, width + 1):
        for r in range(1, len(lam) + 1):
            if lam.part(r) >= c:
                out.append(r)
    return tuple(out)


def _clear_vector(coords):
    """Scale a QFrac vector to integral Laurent coordinates with unit content."""
    den = LaurentQ.one()
    for c in coords:
        if not c.is_zero:
            g = poly_gcd(den, c.den)
            den = den * c.den.exact_div(g)
    nums = []
    for c in coords:
        if c.is_zero:
            nums.append(LaurentQ.zero())
        else:
            nums.append(c.num * den.exact_div(c.den))
    g = None
    for p in nums:
        if not p.is_zero:
            g = p if g is None else poly_gcd(g, p)
            if g.is_unit:
                break
    if g is not None and not g.is_unit:
        nums = [p if p.is_zero else p.exact_div(g) for p in nums]
    return nums


def _kernel_of_raising(vectors, rank):
    """Kernel coefficients c with sum c_t vectors[t] annihilated by all X_i.

    `vectors` are TensorVectors with denominator-free coordinates over the
    ambient word basis; returns (kernel basis over QFrac, rank of system).
    """
    rows = {}
    ncols = len(vectors)
    for idx, vec in enumerate(vectors):
        for i in range(1, rank):
            img = tensor_act("X", i, vec)
            for w, c in img.terms.items():
                rows.setdefault((i, w), [LaurentQ.zero()] * ncols)[idx] = c.num
    matrix = [rows[k] for k in sorted(rows)]
    if not matrix:
        return [[QFrac.one() if t == s else QFrac.zero() for t in range(ncols)]
                for s in range(ncols)], 0
    basis, rk = kernel_basis(matrix, ncols, lambda e: QFrac(e), QFrac.one())
    return basis, rk


def highest_weight_vector(lam: Partition, rank: int) -> TensorVector:
    """Canonical singular vector of the given partition weight in V^{(x)|lam|}.

    Deterministic choice: first kernel basis vector (in word order) with a
    nonzero coefficient on the column reading word, scaled so that
    coefficient is 1, then cleared to integral coordinates.
    """
    lam = Partition(lam)
    if rank < len(lam):
        raise ValueError(f"rank {rank} too small for {lam}")
    n = lam.size
    counts = tuple(lam.part(r) for r in range(1, rank + 1))
    words = _weight_words(counts, rank)
    vectors = [TensorVector.word(w, rank) for w in words]
    basis, _ = _kernel_of_raising(vectors, rank)
    if not basis:
        raise EngineError(f"empty raising kernel for {lam}")
    cw = _column_word(lam)
    cw_idx = words.index(cw)
    for coeffs in basis:
        if not coeffs[cw_idx].is_zero:
            coeffs = [c / coeffs[cw_idx] for c in coeffs]
            nums = _clear_vector(coeffs)
            out = TensorVector(n, rank)
            for w, p in zip(words, nums):
                if not p.is_zero:
                    out.terms[w] = QFrac(p)
            return out
    raise EngineError(f"no kernel vector supported on the column word of {lam}")


@dataclass
class SingularVector:
    """One addable row: its canonical singular vector and normalized self-pairing."""

    row: int
    vector: TensorVector
    norm: QFrac


@lru_cache(maxsize=None)
def mu_singular_vectors(lam: Partition, rank: int) -> tuple[SingularVector, ...]:
    """Singular vectors of (Weyl module) x (standard module), one per addable
    row, normalized triangularly, with their self-pairings.

    The submodule generated by the highest weight vector is spanned, weight by
    weight, by lowering words applied to w_lam (x) v_k; the singular direction
    in each relevant weight space is unique.  The triangular normalization is
    obtained through orthogonality to the lower summands: with u any nonzero
    singular vector, the normalized one is ((u, top)/(u, u)) u where
    top = w_lam (x) v_k, and the reported norm divides out (w_lam, w_lam).
    """
    lam = Partition(lam)
    w_lam = highest_weight_vector(lam, rank)
    ww = tensor_form(w_lam, w_lam)
    n1 = lam.size + 1
    out = []
    for k_j in addable_row_indices(lam, rank):
        spanning = []
        for k in range(1, k_j + 1):
            gen = TensorVector(n1, rank,
                               {w + (k,): c for w, c in w_lam.terms.items()})
            for word in _lowering_words(k, k_j):
                v = gen
                for letter in reversed(word):
                    v = tensor_act("Y", letter, v)
                spanning.append(v)
        basis_vecs = _echelon_vectors(spanning, rank)
        kern, _ = _kernel_of_raising(basis_vecs, rank)
        if len(kern) != 1:
            raise EngineError(
                f"singular space dimension {len(kern)} != 1 for {lam}, row {k_j}")
        u = TensorVector(n1, rank)
        for c, vec in zip(kern[0], basis_vecs):
            if not c.is_zero:
                u = u + vec.scale(c)
        top = TensorVector(n1, rank,
                           {w + (k_j,): c for w, c in w_lam.terms.items()})
        g = tensor_form(u, top)
        uu = tensor_form(u, u)
        if g.is_zero or uu.is_zero:
            raise EngineError(f"degenerate singular pairing for {lam}, row {k_j}")
        vec = u.scale(g / uu)
        norm = (g * g) / (uu * ww)
        out.append(SingularVector(k_j, vec, norm))
    return tuple(out)


def _lowering_words(k: int, k_j: int):
    """Words of multidegree eps_k - eps_{k_j}: permutations of (k .. k_j-1)."""
    letters = list(range(k, k_j))
    if not letters:
        return [()]
    return sorted(set(itertools.permutations(letters)))


def _echelon_vectors(spanning, rank):
    """Reduce spanning TensorVectors to an independent list via fraction-free
    elimination on their word coordinates."""
    words = sorted({w for v in spanning for w in v.terms})
    col = {w: j for j, w in enumerate(words)}
    rows = []
    for v in spanning:
        row = [LaurentQ.zero()] * len(words)
        for w, c in v.terms.items():
            row[col[w]] = c.num if c.den == LaurentQ.one() else None
        if any(e is None for e in row):
            raise EngineError("spanning vector with nontrivial denominator")
        rows.append(row)
    ech, _ = ff_echelon(rows)
    n1 = spanning[0].n
    out = []
    for row in ech:
        v = TensorVector(n1, rank)
        for w, e in zip(words, row):
            if not e.is_zero:
                v.terms[w] = QFrac(e)
        out.append(v)
    return out


def verify_fock_match(lam: Partition, ell: int, rank: int | None = None,
                      tolerance: str = "signed") -> dict:
    """End-to-end check for one partition: oracle self-pairings versus the
    Fock operator exponents and the closed evaluations.

    For every addable row: the cyclotomic valuation of the oracle norm must
    equal both the box statistic and the v-exponent produced by the
    box-adding operator of the box's color; boxes must appear in exactly the
    residue of their color; and the norm must match the closed-form and
    hook-ratio evaluations up to +-q^m (or the requested tolerance).
    """
    lam = Partition(lam)
    if rank is None:
        rank = len(lam) + 1
    singulars = mu_singular_vectors(lam, rank)
    ket = FockVector.ket(lam)
    images = {i: apply_F(i, ket, ell) for i in range(ell)}
    boxes = []
    passed = True
    seen = set()
    for sv in singulars:
        b = Box(sv.row, lam.part(sv.row) + 1)
        col = color(b, ell)
        mu = lam.add_box(b)
        seen.add(mu)
        val = val_cyclotomic(sv.norm, 2 * ell)
        nl = n_left(lam, b, ell)
        fc = images[col].coeff(mu)
        mono = fc.as_monomial()
        exp_ok = mono is not None and mono[1] == 1 and mono[0] == val and val == nl
        wrong_residue = any(not images[i].coeff(mu).is_zero
                            for i in range(ell) if i != col)
        closed = jantzen_evaluate_closed(lam, sv.row, rank)
        hook = hook_ratio(lam, sv.row)
        closed_ok = _power_match(sv.norm, closed, tolerance)
        hook_ok = _power_match(sv.norm, hook, tolerance)
        ok = exp_ok and not wrong_residue and closed_ok and hook_ok
        passed = passed and ok
        boxes.append({
            "row": b.row, "col": b.col,
            "content": content(b), "color": col,
            "n_left": nl, "valuation": val,
            "fock_exponent": mono[0] if mono else None,
            "r": sv.norm.to_text(),
            "matches_closed_form": closed_ok,
            "matches_hook_ratio": hook_ok,
            "pass": ok,
        })
    # every box produced by the Fock operators must come from an addable row
    for i in range(ell):
        for mu, _ in images[i].sorted_terms():
            if mu not in seen:
                passed = False
                boxes.append({"unexpected": list(mu), "color": i, "pass": False})
    return {"partition": list(lam), "ell": ell, "rank": rank,
            "passed": passed, "boxes": boxes}


def _power_match(a: QFrac, b: QFrac, tolerance: str = "signed") -> bool:
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    if tolerance == "unit":
        return True
    sp = (a / b).as_signed_q_power()
    if sp is None:
        return False
    return tolerance == "signed" or sp[0] == 1
