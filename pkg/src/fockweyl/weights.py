"""Integral gl_N weights in the epsilon basis, roots, and root-lattice tests."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Weight:
    """Integral weight (c_1, ..., c_N) in the orthonormal epsilon basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, n: int) -> "Weight":
        return cls((0,) * n)

    @classmethod
    def eps(cls, i: int, n: int) -> "Weight":
        """The i-th coordinate weight (1-indexed)."""
        if not 1 <= i <= n:
            raise ValueError(f"eps index {i} out of range for rank {n}")
        return cls(tuple(1 if j == i else 0 for j in range(1, n + 1)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: "Weight"):
        if self.rank != other.rank:
            raise ValueError("weight rank mismatch")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def dot(self, other: "Weight") -> int:
        """Inner product with (eps_i, eps_j) = delta_ij."""
        self._check(other)
        return sum(a * b for a, b in zip(self.coords, other.coords))

    def alpha_coords(self):
        """Coordinates in the simple-root basis, or None if not in the root lattice."""
        if sum(self.coords) != 0:
            return None
        acc = 0
        out = []
        for c in self.coords[:-1]:
            acc += c
            out.append(acc)
        return tuple(out)

    @property
    def in_q_plus(self) -> bool:
        ac = self.alpha_coords()
        return ac is not None and all(c >= 0 for c in ac)

    @property
    def in_q_minus(self) -> bool:
        ac = self.alpha_coords()
        return ac is not None and all(c <= 0 for c in ac)

    def height(self) -> int:
        """Number of simple roots in an element of Q+ (sum of alpha coordinates)."""
        ac = self.alpha_coords()
        if ac is None:
            raise ValueError("height of a weight outside the root lattice")
        return sum(ac)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def alpha(i: int, n: int) -> Weight:
    """Simple root eps_i - eps_{i+1} (1 <= i <= n-1)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple root index {i} out of range for rank {n}")
    return Weight.eps(i, n) - Weight.eps(i + 1, n)


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Weight, ...]:
    """All eps_i - eps_j with i < j, ordered lexicographically by (i, j)."""
    return tuple(Weight.eps(i, n) - Weight.eps(j, n)
                 for i in range(1, n + 1) for j in range(i + 1, n + 1))


def from_alpha_coords(ac, n: int) -> Weight:
    """Inverse of Weight.alpha_coords for rank n."""
    coords = []
    prev = 0
    for c in list(ac) + [0]:
        coords.append(c - prev)
        prev = c
    return Weight(tuple(coords[:n]))
