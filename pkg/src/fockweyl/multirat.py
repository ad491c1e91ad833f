"""Multivariate exact arithmetic: Laurent polynomials in z_1..z_N and q over Q,
and their field of fractions.

Exponent vectors have length rank+1 with the q exponent last, matching the
fixed variable order z_1 > ... > z_N > q used for canonical forms.  A fraction
is stored with an ordinary (all exponents >= 0) denominator that has minimal
exponent 0 in every variable and lexicographic leading coefficient 1; the
numerator absorbs the net Laurent monomial and the scalar.  This pins one
representative per fraction, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PoleError
from .ring import LaurentQ, QFrac, _coef
from .weights import Weight


class MultiPoly:
    """Sparse multivariate Laurent polynomial over Q (q is the last variable)."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = rank
        t = {}
        if terms:
            nv = rank + 1
            for exps, v in terms.items():
                v = _coef(v)
                if v:
                    if len(exps) != nv:
                        raise ValueError("exponent vector has wrong length")
                    t[tuple(exps)] = v
        self.terms = t

    @classmethod
    def zero(cls, rank):
        return cls(rank)

    @classmethod
    def const(cls, rank, value):
        return cls(rank, {(0,) * (rank + 1): value})

    @classmethod
    def one(cls, rank):
        return cls.const(rank, 1)

    @classmethod
    def z(cls, i, rank, power=1):
        if not 1 <= i <= rank:
            raise ValueError(f"z index {i} out of range for rank {rank}")
        e = [0] * (rank + 1)
        e[i - 1] = power
        return cls(rank, {tuple(e): 1})

    @classmethod
    def q(cls, rank, power=1):
        e = [0] * rank + [power]
        return cls(rank, {tuple(e): 1})

    @classmethod
    def monomial(cls, rank, exps, coeff=1):
        return cls(rank, {tuple(exps): coeff})

    @classmethod
    def from_laurent(cls, p: LaurentQ, rank):
        return cls(rank, {(0,) * rank + (e,): v for e, v in p.c.items()})

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for e, v in other.terms.items():
            s = t.get(e, 0) + v
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        out = MultiPoly(self.rank)
        out.terms = t
        return out

    def __neg__(self):
        out = MultiPoly(self.rank)
        out.terms = {e: -v for e, v in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _coef(other)
            if not other:
                return MultiPoly.zero(self.rank)
            out = MultiPoly(self.rank)
            out.terms = {e: _coef(v * other) for e, v in self.terms.items()}
            return out
        self._check(other)
        t = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + v1 * v2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        out = MultiPoly(self.rank)
        out.terms = {e: _coef(v) for e, v in t.items()}
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial; use MultiRat")
        out = MultiPoly.one(self.rank)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def min_exps(self):
        if not self.terms:
            raise ValueError("min exponents of zero polynomial")
        nv = self.rank + 1
        m = [min(e[i] for e in self.terms) for i in range(nv)]
        return tuple(m)

    def shifted(self, delta):
        """Multiply by the Laurent monomial with exponent vector delta."""
        out = MultiPoly(self.rank)
        out.terms = {tuple(a + b for a, b in zip(e, delta)): v
                     for e, v in self.terms.items()}
        return out

    def lead(self):
        """Lexicographically largest exponent vector and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def complexity(self):
        """Pivot-selection key: term count then total degree spread."""
        if not self.terms:
            return (0, 0)
        tot = max(sum(map(abs, e)) for e in self.terms)
        return (len(self.terms), tot)

    def max_deg(self, var):
        return max(e[var] for e in self.terms)

    def eval_z(self, lam) -> LaurentQ:
        """Substitute z_i -> q^{lam_i}; returns a Laurent polynomial in q."""
        coords = lam.coords if isinstance(lam, Weight) else tuple(lam)
        if len(coords) != self.rank:
            raise ValueError("weight length does not match rank")
        c = {}
        for e, v in self.terms.items():
            k = e[-1] + sum(a * b for a, b in zip(e[:-1], coords))
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return LaurentQ(c)

    def sigma(self, mu) -> "MultiPoly":
        """Substitute z_i -> q^{mu_i} z_i (a ring automorphism fixing q)."""
        coords = mu.coords if isinstance(mu, Weight) else tuple(mu)
        if len(coords) != self.rank:
            raise ValueError("weight length does not match rank")
        out = MultiPoly(self.rank)
        out.terms = {e[:-1] + (e[-1] + sum(a * b for a, b in zip(e[:-1], coords)),): v
                     for e, v in self.terms.items()}
        return out

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            v = self.terms[e]
            mag = abs(Fraction(v))
            names = []
            for i, k in enumerate(e[:-1]):
                if k:
                    names.append(f"z{i + 1}" if k == 1 else f"z{i + 1}^{k}")
            if e[-1]:
                names.append("q" if e[-1] == 1 else f"q^{e[-1]}")
            if not names:
                body = str(_coef(mag))
            else:
                mono = "*".join(names)
                body = mono if mag == 1 else f"{_coef(mag)}*{mono}"
            if not parts:
                parts.append(body if v > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if v > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r})"


def _divexact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact division of ordinary polynomials (raises if inexact)."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero:
        return MultiPoly.zero(f.rank)
    ge, gc = g.lead()
    out = {}
    rem = dict(f.terms)
    while rem:
        fe = max(rem)
        de = tuple(a - b for a, b in zip(fe, ge))
        if any(d < 0 for d in de):
            raise ArithmeticError("inexact multivariate division")
        t = _coef(Fraction(rem[fe]) / Fraction(gc))
        out[de] = t
        for e, v in g.terms.items():
            e2 = tuple(a + b for a, b in zip(e, de))
            s = rem.get(e2, 0) - t * v
            if s:
                rem[e2] = _coef(s)
            else:
                rem.pop(e2, None)
    res = MultiPoly(f.rank)
    res.terms = out
    return res


def _as_univar(f: MultiPoly, var: int):
    """View an ordinary polynomial as univariate in `var` with MultiPoly coefficients."""
    by = {}
    for e, v in f.terms.items():
        k = e[var]
        e0 = e[:var] + (0,) + e[var + 1:]
        by.setdefault(k, {})[e0] = v
    out = {}
    for k, terms in by.items():
        p = MultiPoly(f.rank)
        p.terms = terms
        out[k] = p
    return out


def _int_normalize(p: MultiPoly) -> MultiPoly:
    """Unique associate with integer coefficients, content 1 and positive
    lexicographic leading coefficient."""
    if p.is_zero:
        return p
    den_lcm = 1
    all_int = True
    for v in p.terms.values():
        if not isinstance(v, int):
            all_int = False
            den_lcm = _lcm(den_lcm, Fraction(v).denominator)
    if all_int:
        terms = dict(p.terms)
    else:
        terms = {e: int(Fraction(v) * den_lcm) for e, v in p.terms.items()}
    g = 0
    for v in terms.values():
        g = _gcd_int(g, v)
    if terms[max(terms)] < 0:
        g = -g
    if g != 1:
        terms = {e: v // g for e, v in terms.items()}
    out = MultiPoly(p.rank)
    out.terms = terms
    return out


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd_int(a, b)


def _content(coeffs) -> MultiPoly:
    g = None
    for p in coeffs:
        g = p if g is None else poly_gcd_multi(g, p)
        if g.terms == {(0,) * (g.rank + 1): 1}:
            break
    return g


def _prem_strict(a, b):
    """Strict pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
    da, db = max(a), max(b)
    lb = b[db]
    r = dict(a)
    n = da - db + 1
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        n -= 1
        nr = {}
        for e, v in r.items():
            if e == dr:
                continue
            nr[e] = v * lb
        for e, v in b.items():
            if e == db:
                continue
            e2 = e + dr - db
            s = nr.get(e2, MultiPoly.zero(lb.rank)) - v * lr
            if s.is_zero:
                nr.pop(e2, None)
            else:
                nr[e2] = s
        r = nr
    if r and n > 0:
        scale = lb ** n
        r = {e: v * scale for e, v in r.items()}
    return r


def _subresultant_last(a, b):
    """Last nonzero remainder of the subresultant PRS (deg a >= deg b).

    The subresultant divisors keep coefficient growth polynomial; divisions
    are exact over the coefficient ring.
    """
    one = MultiPoly.one(next(iter(a.values())).rank)
    g = one
    h = one
    while True:
        delta = max(a) - max(b)
        r = _prem_strict(a, b)
        if not r:
            return b
        denom = g * (h ** delta)
        if denom != one:
            r = {e: _divexact(v, denom) for e, v in r.items()}
        a, b = b, r
        g = a[max(a)]
        if delta == 1:
            h = g
        elif delta > 1:
            h = _divexact(g ** delta, h ** (delta - 1))


def _primitive_univar(u):
    cont = _content(u.values())
    if cont.terms == {(0,) * (cont.rank + 1): 1}:
        return dict(u), cont
    return {k: _divexact(p, cont) for k, p in u.items()}, cont


def poly_gcd_multi(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """GCD of ordinary multivariate polynomials over Q, normalized to integer
    coefficients with content 1 and positive leading coefficient in lex order.

    Strategy: heuristic evaluation gcd first (fast on the structured inputs
    the library produces), subresultant pseudo-remainder sequence as the
    deterministic fallback; all intermediate arithmetic stays over Z.
    """
    if f.is_zero:
        return _int_normalize(g)
    if g.is_zero:
        return _int_normalize(f)
    f = _int_normalize(f)
    g = _int_normalize(g)
    if f.terms == g.terms:
        return f
    nv = f.rank + 1
    active = [v for v in range(nv) if f.max_deg(v) > 0 or g.max_deg(v) > 0]
    if not active:
        return MultiPoly.one(f.rank)
    if len(active) == 1:
        return _gcd_univar_q(f, g, active[0])
    h = _heugcd(f, g)
    if h is not None:
        h = _int_normalize(h)
        # the heuristic guarantees h | gcd; certify maximality or repair
        cf = f if _is_one(h) else _divexact(f, h)
        cg = g if _is_one(h) else _divexact(g, h)
        if _certified_coprime(cf, cg):
            return h
        if not _is_one(h):
            extra = poly_gcd_multi(cf, cg)
            return h if _is_one(extra) else _int_normalize(h * extra)
    return _gcd_subresultant(f, g, active)


def _certified_coprime(cf: MultiPoly, cg: MultiPoly, tries: int = 3) -> bool:
    """Prove two primitive polynomials coprime by joint integer evaluation.

    A common nonconstant factor keeps absolute value > 1 at every sufficiently
    large evaluation point, so a single gcd-1 evaluation is a certificate;
    failures may be accidental, hence the retries.
    """
    if _is_one(cf) or _is_one(cg):
        return True
    nv = cf.rank + 1
    bump = 0
    for _ in range(tries):
        vf, vg = cf, cg
        for var in range(nv):
            if vf.max_deg(var) == 0 and vg.max_deg(var) == 0:
                continue
            xi = 2 * max(_max_norm(vf), _max_norm(vg)) + 31 + bump
            vf = _eval_var(vf, var, xi)
            vg = _eval_var(vg, var, xi)
        a = abs(next(iter(vf.terms.values()))) if vf.terms else 0
        b = abs(next(iter(vg.terms.values()))) if vg.terms else 0
        if _gcd_int(a, b) == 1:
            return True
        bump = bump * 31 + 127
    return False


def _gcd_subresultant(f: MultiPoly, g: MultiPoly, active) -> MultiPoly:
    nv = f.rank + 1
    # main variable of smallest degree keeps the remainder sequence short
    var = min(active, key=lambda v: max(f.max_deg(v), g.max_deg(v)))
    uf = _as_univar(f, var)
    ug = _as_univar(g, var)
    pf, cf = _primitive_univar(uf)
    pg, cg = _primitive_univar(ug)
    cont = poly_gcd_multi(cf, cg)
    a, b = pf, pg
    if max(a) < max(b):
        a, b = b, a
    last = _subresultant_last(a, b)
    last, _ = _primitive_univar(last)
    prim = MultiPoly.zero(f.rank)
    for k, p in last.items():
        e = [0] * nv
        e[var] = k
        prim = prim + p.shifted(tuple(e))
    prim, _ = _strip_monomial(prim)
    return _int_normalize(cont * prim)


def _max_norm(p: MultiPoly) -> int:
    return max(abs(v) for v in p.terms.values())


def _eval_var(p: MultiPoly, var: int, xi: int) -> MultiPoly:
    terms = {}
    for e, v in p.terms.items():
        e0 = e[:var] + (0,) + e[var + 1:]
        s = terms.get(e0, 0) + v * xi ** e[var]
        if s:
            terms[e0] = s
        else:
            terms.pop(e0, None)
    out = MultiPoly(p.rank)
    out.terms = terms
    return out


def _from_digits(h: MultiPoly, var: int, xi: int) -> MultiPoly:
    """Invert evaluation at xi by balanced base-xi digits."""
    cur = dict(h.terms)
    out = {}
    i = 0
    half = xi // 2
    while cur:
        nxt = {}
        for e, v in cur.items():
            r = v % xi
            if r > half:
                r -= xi
            if r:
                out[e[:var] + (i,) + e[var + 1:]] = r
            w = (v - r) // xi
            if w:
                nxt[e] = w
        cur = nxt
        i += 1
    res = MultiPoly(h.rank)
    res.terms = out
    return res


def _try_divides(a: MultiPoly, b: MultiPoly):
    try:
        return _divexact(a, b)
    except ArithmeticError:
        return None


def _heugcd(f: MultiPoly, g: MultiPoly, depth: int = 0):
    """Heuristic gcd by integer evaluation; None when no attempt verifies."""
    nv = f.rank + 1
    active = [v for v in range(nv) if f.max_deg(v) > 0 or g.max_deg(v) > 0]
    if not active:
        c = _gcd_int(next(iter(f.terms.values())), next(iter(g.terms.values())))
        return MultiPoly.const(f.rank, c)
    var = min(active, key=lambda v: max(f.max_deg(v), g.max_deg(v)))
    xi = 2 * max(_max_norm(f), _max_norm(g)) + 29
    for _ in range(6):
        fe = _eval_var(f, var, xi)
        ge = _eval_var(g, var, xi)
        he = _heugcd(fe, ge, depth + 1)
        if he is not None and not he.is_zero:
            h = _from_digits(he, var, xi)
            if not h.is_zero:
                h = _int_normalize(_strip_monomial(h)[0])
                if _try_divides(f, h) is not None and _try_divides(g, h) is not None:
                    return h
        xi = xi * 73794 // 27011 + 37
    return None


def _strip_monomial(p: MultiPoly):
    """Factor out the largest dividing monomial; returns (ordinary part, exps)."""
    m = p.min_exps()
    if any(m):
        p = p.shifted(tuple(-x for x in m))
    return p, m


def _is_one(p: MultiPoly) -> bool:
    return p.terms == {(0,) * (p.rank + 1): 1}


def _div_laurent(p: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact division of a Laurent polynomial by an ordinary one."""
    p0, m = _strip_monomial(p)
    return _divexact(p0, g).shifted(m)


def _gcd_univar_q(f: MultiPoly, g: MultiPoly, var: int) -> MultiPoly:
    a = LaurentQ({e[var]: v for e, v in f.terms.items()})
    b = LaurentQ({e[var]: v for e, v in g.terms.items()})
    from .ring import poly_gcd
    d = poly_gcd(a, b)
    nv = f.rank + 1
    out = MultiPoly(f.rank)
    out.terms = {tuple(k if i == var else 0 for i in range(nv)): v
                 for k, v in d.c.items()}
    return out


class MultiRat:
    """Element of the fraction field Q(q, z_1, ..., z_N) in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None, *,
                 coprime: bool = False):
        if den is None:
            den = MultiPoly.one(num.rank)
        if num.rank != den.rank:
            raise ValueError("rank mismatch")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = MultiPoly.zero(num.rank)
            self.den = MultiPoly.one(num.rank)
            return
        n0, mn = _strip_monomial(num)
        d0, md = _strip_monomial(den)
        if not coprime:
            g = poly_gcd_multi(n0, d0)
            if g.terms != {(0,) * (num.rank + 1): 1}:
                n0 = _divexact(n0, g)
                d0 = _divexact(d0, g)
                n0, m2 = _strip_monomial(n0)
                d0, m3 = _strip_monomial(d0)
                mn = tuple(a + b for a, b in zip(mn, m2))
                md = tuple(a + b for a, b in zip(md, m3))
        dc = _int_normalize(d0)
        scale = Fraction(dc.lead()[1]) / Fraction(d0.lead()[1])
        if scale != 1:
            n0 = n0 * scale
        delta = tuple(a - b for a, b in zip(mn, md))
        self.num = n0.shifted(delta) if any(delta) else n0
        self.den = dc

    @property
    def rank(self):
        return self.num.rank

    @classmethod
    def zero(cls, rank):
        return cls(MultiPoly.zero(rank))

    @classmethod
    def one(cls, rank):
        return cls(MultiPoly.one(rank))

    @classmethod
    def const(cls, rank, value):
        return cls(MultiPoly.const(rank, value))

    @classmethod
    def z(cls, i, rank, power=1):
        return cls(MultiPoly.z(i, rank, power), coprime=True)

    @classmethod
    def q(cls, rank, power=1):
        return cls(MultiPoly.q(rank, power), coprime=True)

    @classmethod
    def from_laurent(cls, p: LaurentQ, rank):
        return cls(MultiPoly.from_laurent(p, rank), coprime=True)

    @classmethod
    def from_qfrac(cls, x: QFrac, rank):
        return cls(MultiPoly.from_laurent(x.num, rank),
                   MultiPoly.from_laurent(x.den, rank), coprime=True)

    @property
    def is_zero(self):
        return self.num.is_zero

    def _wrap(self, x):
        if isinstance(x, MultiRat):
            return x
        if isinstance(x, (int, Fraction)):
            return MultiRat.const(self.rank, x)
        if isinstance(x, MultiPoly):
            return MultiRat(x)
        if isinstance(x, LaurentQ):
            return MultiRat.from_laurent(x, self.rank)
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        sn, sd, on, od = self.num, self.den, other.num, other.den
        # Henrici reduction: any common factor of the combined numerator and
        # denominator divides g = gcd(sd, od), so only small gcds are needed.
        g = poly_gcd_multi(sd, od)
        if _is_one(g):
            t = sn * od + on * sd
            return MultiRat(t, sd * od, coprime=True)
        t = sn * _divexact(od, g) + on * _divexact(sd, g)
        if t.is_zero:
            return MultiRat.zero(self.rank)
        h = poly_gcd_multi(_strip_monomial(t)[0], g)
        if not _is_one(h):
            t = _div_laurent(t, h)
            od = _divexact(od, h)
        return MultiRat(t, _divexact(sd, g) * od, coprime=True)

    __radd__ = __add__

    def __neg__(self):
        out = MultiRat.zero(self.rank)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return MultiRat.zero(self.rank)
        an, ad, bn, bd = self.num, self.den, other.num, other.den
        # cross-reduce so the product is born coprime
        g1 = poly_gcd_multi(_strip_monomial(an)[0], bd)
        if not _is_one(g1):
            an = _div_laurent(an, g1)
            bd = _divexact(bd, g1)
        g2 = poly_gcd_multi(_strip_monomial(bn)[0], ad)
        if not _is_one(g2):
            bn = _div_laurent(bn, g2)
            ad = _divexact(ad, g2)
        return MultiRat(an * bn, ad * bd, coprime=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._wrap(other) / self

    def __pow__(self, n):
        if n < 0:
            return MultiRat.one(self.rank) / self ** (-n)
        out = MultiRat.one(self.rank)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return MultiRat(self.den, self.num, coprime=True)

    def __eq__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_text(self):
        if self.den == MultiPoly.one(self.rank):
            return self.num.to_text()
        return f"({self.num.to_text()})/({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self):
        return f"MultiRat({self.to_text()!r})"


def sigma_shift(f: MultiRat, mu) -> MultiRat:
    """Apply the field automorphism z_i -> q^{(mu, eps_i)} z_i."""
    if f.is_zero:
        return f
    # gcd-free: an automorphism preserves coprimality, only renormalize units
    return MultiRat(f.num.sigma(mu), f.den.sigma(mu), coprime=True)


def eval_at_weight(f: MultiRat, lam) -> QFrac:
    """Evaluate z_i -> q^{(lam, eps_i)}; raises PoleError if the denominator dies."""
    den = f.den.eval_z(lam)
    if den.is_zero:
        raise PoleError(f"evaluation pole at {lam}")
    return QFrac(f.num.eval_z(lam), den)


def q_bracket_binom(i: int, c: int, k: int, rank: int) -> MultiRat:
    """Product form of the Cartan q-binomial in the weight-coordinate z_i."""
    if not 1 <= i <= rank:
        raise ValueError(f"index {i} out of range for rank {rank}")
    if k < 1:
        raise ValueError("k must be >= 1")
    num = MultiPoly.one(rank)
    den = MultiPoly.one(rank)
    for s in range(1, k + 1):
        num = num * (MultiPoly.z(i, rank).shifted(_qexp(rank, c + 1 - s))
                     - MultiPoly.z(i, rank, -1).shifted(_qexp(rank, s - 1 - c)))
        den = den * (MultiPoly.q(rank, s) - MultiPoly.q(rank, -s))
    return MultiRat(num, den)


def _qexp(rank, m):
    return (0,) * rank + (m,)


class UnitParts:
    """Decomposition of a unit of Q(q)[z^{+-1}] as sign * q^m * z-monomial * scalar.

    The convention: q_exp is the trailing q-degree of the Q(q) part, the sign
    comes from the trailing coefficients, and scalar is what remains (1 when
    the unit is exactly +-q^m times a z-monomial).
    """

    __slots__ = ("sign", "q_exp", "z_exps", "scalar")

    def __init__(self, sign, q_exp, z_exps, scalar):
        self.sign = sign
        self.q_exp = q_exp
        self.z_exps = z_exps
        self.scalar = scalar

    @property
    def is_signed_q_power(self):
        return self.scalar == QFrac.one()

    @property
    def is_plus_q_power(self):
        return self.is_signed_q_power and self.sign == 1

    def __repr__(self):
        return (f"UnitParts(sign={self.sign}, q_exp={self.q_exp}, "
                f"z_exps={self.z_exps}, scalar={self.scalar})")


def unit_ratio(a: MultiRat, b: MultiRat, strict: bool = False):
    """Decompose a/b when it is a unit of Q(q)[z_1^{+-1},...,z_N^{+-1}].

    Returns UnitParts, or None when a/b is not a unit.  In strict mode the
    residual Q(q) scalar must be exactly +-q^m (else None).
    """
    if b.is_zero:
        raise ZeroDivisionError("unit_ratio with zero divisor")
    r = a / b
    if r.is_zero:
        return None
    nz = _single_z_block(r.num)
    dz = _single_z_block(r.den)
    if nz is None or dz is None:
        return None
    (zn, pn), (zd, pd) = nz, dz
    z_exps = tuple(x - y for x, y in zip(zn, zd))
    u = QFrac(pn, pd)
    m = u.num.low_degree() - u.den.low_degree()
    sign = 1 if (u.num.trailing_coeff() > 0) == (u.den.trailing_coeff() > 0) else -1
    scalar = u / QFrac(LaurentQ.term(m, sign))
    parts = UnitParts(sign, m, z_exps, scalar)
    if strict and not parts.is_signed_q_power:
        return None
    return parts


def _single_z_block(p: MultiPoly):
    """If all terms share one z-exponent vector, return (z_exps, q-Laurent part)."""
    zs = {e[:-1] for e in p.terms}
    if len(zs) != 1:
        return None
    (z,) = zs
    return z, LaurentQ({e[-1]: v for e, v in p.terms.items()})
