"""Accelerated series streams and their bracket normal form.

Summing a verified recurrence p1(n) F(n+r, k) + p2(n) F(n, k) =
(cert F)(n, k+1) - (cert F)(n, k) over k >= 0 turns the k-sum FF(n)
into

    FF(n) = g1(n) + g2(n) FF(n + r),
    g1(n) = -cert(n, 0) F(n, 0) / p2(n),     g2(n) = -p1(n) / p2(n),

and unrolling from a start point n0 yields the accelerated series.  The
stream is normalized by F(n0, 0), so every term is an exact rational
number built from the certificate, p1, p2, and the n-shift ratio of the
summand evaluated along nu_j = n0 + r j.  AccelStream generates the
terms lazily and carries the term quotient t_{j+1}/t_j as a rational
function of j.

Unrolling is valid only when the remainder after m steps dies off.
vanishing_check estimates that remainder in double precision: the
running product of g2 times a direct-summation value of the original
series at the shifted point, each summand there normalized by its own
k = 0 term.  It is a numeric heuristic, not a proof; the exact
certificate of correctness is agreement of the summed stream with its
closed form.

The bracket normal form rewrites the stream as scale * T_j with

    T_j = z^j * prod (u)_j / prod (l)_j * num(j) / den(j),

where (x)_j is a rising factorial, num is a primitive integer
polynomial with positive leading coefficient, and den is a product of
primitive integer linear factors.  Rising-factorial quotients whose
parameters differ by an integer are folded into num and den, so the
remaining upper and lower parameter lists share no integer gaps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from hyperaccel.exact_arith import MultiPoly, RatFunc, Scalar, UniPoly, rational_roots
from hyperaccel.hypergeom_terms import HypTerm, k_shift_ratio, n_shift_ratio
from hyperaccel.telescoper import Recurrence

_F0 = Fraction(0)
_F1 = Fraction(1)

_REMAINDER_TOL = 1e-30
_ORACLE_TERMS = 300


# ---------------------------------------------------------------------------
# Convergence rate
# ---------------------------------------------------------------------------


def convergence_rate(rec: Recurrence) -> Fraction:
    """Limit of -p1(n)/p2(n) as n grows; 0 when deg p1 < deg p2.

    The recurrence must be instantiated so p1 and p2 are univariate in
    n.  Raises when deg p1 exceeds deg p2, since the unrolled stream
    then cannot converge.
    """
    p1 = rec.p1.as_unipoly("n")
    p2 = rec.p2.as_unipoly("n")
    if p2.is_zero or p1.degree > p2.degree:
        raise ValueError("divergent acceleration")
    if p1.degree < p2.degree:
        return _F0
    return -p1.lc / p2.lc


# ---------------------------------------------------------------------------
# Remainder estimate
# ---------------------------------------------------------------------------


def _horner(coeffs: list[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def direct_sum_estimate(term: HypTerm, nu: Scalar,
                        k_terms: int = _ORACLE_TERMS) -> float:
    """Double-precision direct sum of the original series at n = nu.

    Terms are normalized by the k = 0 term.  Raises when the terms fail
    to decay, which signals a series that is not summable at the
    shifted point.
    """
    rho = k_shift_ratio(term).subst({"n": Fraction(nu)})
    num = [float(c) for c in rho.num.as_unipoly("k").coeffs]
    den = [float(c) for c in rho.den.as_unipoly("k").coeffs]
    t = 1.0
    total = 0.0
    for k in range(k_terms):
        total += t
        d = _horner(den, float(k))
        if d == 0.0 or not math.isfinite(d):
            raise ValueError("direct summation oracle diverges")
        t *= _horner(num, float(k)) / d
    if not math.isfinite(total) or not math.isfinite(t) or abs(t) > 1.0:
        raise ValueError("direct summation oracle diverges")
    return total


def vanishing_check(term: HypTerm, rec: Recurrence, n0: Scalar,
                    m_max: int = 200) -> bool:
    """Numeric estimate that the unrolling remainder dies off.

    After m unrolling steps the remainder is gauged by the running
    product of g2(nu_o) over o <= m times the original series at
    nu_{m+1}, each evaluated relative to its own k = 0 summand.  The
    product runs in double precision with the series value from the
    direct-summation oracle; the estimate must fall below 1e-30 by
    m_max and decrease monotonically over the final ten steps.  A
    geometric |g2| below one passes; fabricated coefficients with
    |g2| >= 1 fail.
    """
    p1 = rec.p1.as_unipoly("n")
    p2 = rec.p2.as_unipoly("n")
    nu = Fraction(n0)
    pre = 1.0
    vals = []
    for m in range(m_max + 1):
        p2v = p2.eval(nu)
        if p2v == 0:
            raise ValueError(f"pole in accelerated stream at term {m}")
        pre *= abs(float(-p1.eval(nu) / p2v))
        nu += rec.r
        vals.append(pre * abs(direct_sum_estimate(term, nu)))
    if not vals[-1] < _REMAINDER_TOL:
        return False
    last = vals[-10:]
    return all(last[i + 1] <= last[i] for i in range(len(last) - 1))


# ---------------------------------------------------------------------------
# Exact stream generation
# ---------------------------------------------------------------------------


def iter_accelerated(term: HypTerm, rec: Recurrence, n0: Scalar) -> Iterator[Fraction]:
    """Exact accelerated terms t_j, normalized by F(n0, 0)."""
    rho_n = n_shift_ratio(term, rec.r)
    p1 = rec.p1.as_unipoly("n")
    p2 = rec.p2.as_unipoly("n")
    nu = Fraction(n0)
    pre = _F1
    j = 0
    while True:
        p2v = p2.eval(nu)
        if p2v == 0:
            raise ValueError(f"pole in accelerated stream at term {j}")
        try:
            cv = rec.cert.eval({"n": nu, "k": 0})
            rv = rho_n.eval({"n": nu, "k": 0})
        except ZeroDivisionError:
            raise ValueError(f"pole in accelerated stream at term {j}") from None
        yield pre * (-cv) / p2v
        pre *= (-p1.eval(nu) / p2v) * rv
        nu += rec.r
        j += 1


def stream_ratio(term: HypTerm, rec: Recurrence, n0: Scalar) -> RatFunc:
    """Term quotient t_{j+1}/t_j of the accelerated stream, rational in j."""
    r = rec.r
    nu = MultiPoly.affine(Fraction(n0), j=r)
    nu_next = nu + MultiPoly.const(r)

    def at_zero(rf: RatFunc) -> RatFunc:
        return rf.subst({"k": 0})

    def sub(rf: RatFunc, repl: MultiPoly) -> RatFunc:
        return RatFunc.new(rf.num.subst_poly("n", repl),
                           rf.den.subst_poly("n", repl))

    cert0 = at_zero(rec.cert)
    rho0 = at_zero(n_shift_ratio(term, r))
    p1rf = RatFunc.from_poly(rec.p1)
    p2rf = RatFunc.from_poly(rec.p2)
    num = sub(p1rf, nu) * sub(cert0, nu_next) * sub(rho0, nu)
    den = sub(cert0, nu) * sub(p2rf, nu_next)
    return -(num / den)


class AccelStream:
    """Lazily generated accelerated terms with their term quotient.

    source, rec, and n0 identify the stream; term(j) and take(count)
    yield exact rational terms from a growing cache; ratio is
    t_{j+1}/t_j as a rational function of the index j.
    """

    def __init__(self, source: HypTerm, rec: Recurrence, n0: Scalar):
        self.source = source
        self.rec = rec
        self.n0 = Fraction(n0)
        self.ratio = stream_ratio(source, rec, n0)
        self._it = iter_accelerated(source, rec, n0)
        self._cache: list[Fraction] = []

    def term(self, j: int) -> Fraction:
        while len(self._cache) <= j:
            self._cache.append(next(self._it))
        return self._cache[j]

    def take(self, count: int) -> list[Fraction]:
        return [self.term(j) for j in range(count)]


def accelerated_stream(term: HypTerm, rec: Recurrence, n0: Scalar,
                       check_vanishing: bool = True,
                       m_max: int = 200) -> AccelStream:
    """Accelerated stream at start point n0, guarded against poles.

    The rational roots of p2 are tested exactly against the progression
    n0 + r j, so a pole is reported with its term index before any term
    is generated.  Unless disabled, the remainder estimate must pass
    vanishing_check, else ValueError("remainder does not vanish").
    """
    p2 = rec.p2.as_unipoly("n")
    if p2.is_zero:
        raise ValueError("pole in accelerated stream at term 0")
    if p2.degree > 0:
        for root in rational_roots(p2):
            q = (root - Fraction(n0)) / rec.r
            if q.denominator == 1 and q >= 0:
                raise ValueError(f"pole in accelerated stream at term {int(q)}")
    if check_vanishing and not vanishing_check(term, rec, n0, m_max=m_max):
        raise ValueError("remainder does not vanish")
    return AccelStream(term, rec, n0)


def stream_proportional(s1: Sequence[Fraction], s2: Sequence[Fraction],
                        j_max: Optional[int] = None) -> Optional[Fraction]:
    """Constant c with s1_j = c * s2_j for all j <= j_max, or None.

    j_max defaults to the last index both sequences cover.  Returns
    None when no single constant works or when both streams vanish
    identically over the window, where the constant is not determined.
    """
    if j_max is None:
        j_max = min(len(s1), len(s2)) - 1
    if j_max < 0 or len(s1) <= j_max or len(s2) <= j_max:
        raise ValueError("streams shorter than the comparison window")
    const: Optional[Fraction] = None
    for j in range(j_max + 1):
        x, y = s1[j], s2[j]
        if (x == 0) != (y == 0):
            return None
        if y != 0:
            c = x / y
            if const is None:
                const = c
            elif c != const:
                return None
    return const


# ---------------------------------------------------------------------------
# Bracket normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChuSeries:
    """Series sum_j z^j prod (u)_j / prod (l)_j * num(j)/den(j)."""

    z: Fraction
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    num: UniPoly
    den: UniPoly

    def term(self, j: int) -> Fraction:
        """Exact j-th term; raises ZeroDivisionError on a denominator zero."""
        val = self.z ** j * Fraction(self.num.eval(j), 1)
        d = self.den.eval(j)
        if d == 0:
            raise ZeroDivisionError("pole of series term")
        for u in self.upper:
            for i in range(j):
                val *= u + i
        for l in self.lower:
            for i in range(j):
                val /= l + i
        return val / d

    def ratio(self) -> RatFunc:
        """Term quotient term(j+1)/term(j) as a rational function of j."""
        jv = MultiPoly.var("j")
        num = MultiPoly.const(self.z) * MultiPoly.from_unipoly(self.num.shift(1), "j")
        num = num * MultiPoly.from_unipoly(self.den, "j")
        den = MultiPoly.from_unipoly(self.num, "j")
        den = den * MultiPoly.from_unipoly(self.den.shift(1), "j")
        for u in self.upper:
            num = num * (jv + MultiPoly.const(u))
        for l in self.lower:
            den = den * (jv + MultiPoly.const(l))
        return RatFunc.new(num, den)


def _rooted_split(p: UniPoly) -> tuple[list[Fraction], UniPoly]:
    """Rational roots with multiplicity and the monic rootless cofactor."""
    roots = rational_roots(p)
    rest = p.exact_div(UniPoly.from_roots(roots, p.lc)) if roots else p.scale(1 / p.lc)
    return roots, rest


def chu_normalize(ratio: RatFunc, t0: Fraction) -> tuple[ChuSeries, Fraction]:
    """Bracket normal form of a stream from its term quotient and first term.

    Returns (series, scale) with scale * series.term(j) equal to the j-th
    stream term for every j.  Raises ValueError("non-Chu-normalizable")
    when the quotient does not have the required shape.
    """
    free = ratio.num.variables() | ratio.den.variables()
    if not free <= {"j"}:
        raise ValueError("non-Chu-normalizable")
    n_u = ratio.num.as_unipoly("j")
    d_u = ratio.den.as_unipoly("j")
    if n_u.is_zero or d_u.is_zero or n_u.degree != d_u.degree or t0 == 0:
        raise ValueError("non-Chu-normalizable")
    g = n_u.gcd(d_u)
    if g.degree > 0:
        n_u, d_u = n_u.exact_div(g), d_u.exact_div(g)
    z = n_u.lc / d_u.lc
    n_roots, n_rest = _rooted_split(n_u)
    d_roots, d_rest = _rooted_split(d_u)
    if n_rest != d_rest.shift(1):
        raise ValueError("non-Chu-normalizable")
    uppers = sorted(-rt for rt in n_roots)
    lowers = sorted(-rt for rt in d_roots)
    num = d_rest
    den = UniPoly.one()
    # fold integer-gap parameter pairs into the polynomial parts
    folded = True
    while folded:
        folded = False
        for u in list(uppers):
            mates = sorted(l for l in lowers if (u - l).denominator == 1)
            if not mates:
                continue
            l = mates[0]
            uppers.remove(u)
            lowers.remove(l)
            gap = int(u - l)
            if gap > 0:
                for i in range(gap):
                    num = num * UniPoly.from_roots([-(l + i)])
            else:
                for i in range(-gap):
                    if u + i <= 0 and (u + i).denominator == 1:
                        raise ValueError("non-Chu-normalizable")
                    den = den * UniPoly.from_roots([-(u + i)]).primitive()
            folded = True
            break
    num = num.primitive()
    if num.eval(0) == 0 or den.eval(0) == 0:
        raise ValueError("non-Chu-normalizable")
    series = ChuSeries(z=z, upper=tuple(uppers), lower=tuple(lowers),
                       num=num, den=den)
    if not series.ratio().equals(ratio):
        raise ValueError("non-Chu-normalizable")
    scale = t0 * den.eval(0) / num.eval(0)
    return series, scale
