"""Two-term recurrence certificates and their Gosper-style derivation.

A recurrence couples a summand F(n, k) at two n-offsets,

    p1(n) F(n + r, k) + p2(n) F(n, k) = G(n, k + 1) - G(n, k),

with G = cert * F for a rational certificate cert(n, k).  Verification
substitutes the exact shift ratios of F and reduces the residual to a
rational function, which must be identically zero.

Derivation runs the parameterized Gosper algorithm: with rho_k = Nk/Dk
and rho_n = Nn/Dn the shift ratios of an instantiated summand, the
modified ratio Dn(k) Nk / (Dn(k+1) Dk) is put into normal form
(P, Q, R) with gcd(Q(k), R(k+j)) = 1 for all j >= 0, and

    Q(k) x(k+1) - R(k-1) x(k) = P(k) (p1 Nn(k) + p2 Dn(k))

is solved for a polynomial x and scalars (p1, p2) by exact linear
algebra over the field of rational functions in n.  The certificate is
R(k-1) x(k) / (P(k) Dn(k)).  Solver polynomials in k carry coefficients
in that field (class KP); the linear systems are cleared to polynomial
matrices and eliminated fraction-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Optional, Sequence

from hyperaccel.builtin_data import neg27_dataset, negq_dataset, quarter_dataset
from hyperaccel.exact_arith import MultiPoly, NRat, RatFunc, Scalar, UniPoly, rational_roots
from hyperaccel.hypergeom_terms import (
    FamilyId,
    HypTerm,
    family_term,
    k_ratio_parts,
    k_shift_ratio,
    n_ratio_parts,
    n_shift_ratio,
)

_NR0 = NRat.const(0)
_NR1 = NRat.const(1)


# ---------------------------------------------------------------------------
# Recurrence container and exact verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Recurrence:
    """p1(n) F(n+r, k) + p2(n) F(n, k) = (cert * F)(n, k+1) - (cert * F)(n, k)."""

    r: int
    p1: MultiPoly
    p2: MultiPoly
    cert: RatFunc
    family: Optional[FamilyId] = None


def recurrence_residual(term: HypTerm, rec: Recurrence) -> RatFunc:
    """Exact residual of the telescoped recurrence; zero iff it holds."""
    rho_n = n_shift_ratio(term, rec.r)
    rho_k = k_shift_ratio(term)
    lhs = RatFunc.from_poly(rec.p1) * rho_n + RatFunc.from_poly(rec.p2)
    rhs = rec.cert.shift_var("k", 1) * rho_k - rec.cert
    return lhs - rhs


def verify_recurrence(term: HypTerm, rec: Recurrence) -> bool:
    return recurrence_residual(term, rec).is_zero


_BUILTIN_SHIFTS = {
    FamilyId.QUARTER: 1,
    FamilyId.NEG_QUARTER: 2,
    FamilyId.NEG_27: 1,
}


def theorem_families() -> tuple[FamilyId, ...]:
    """Families that carry a stored fully general recurrence."""
    return tuple(_BUILTIN_SHIFTS)


@lru_cache(maxsize=None)
def builtin_recurrence(family: FamilyId) -> Optional[Recurrence]:
    """Stored recurrence for the three fully general families, if any."""
    if family is FamilyId.QUARTER:
        p1, p2, cert = quarter_dataset()
    elif family is FamilyId.NEG_QUARTER:
        p1, p2, cert = negq_dataset()
    elif family is FamilyId.NEG_27:
        p1, p2, cert = neg27_dataset()
    else:
        return None
    return Recurrence(r=_BUILTIN_SHIFTS[family], p1=p1, p2=p2, cert=cert,
                      family=family)


def builtin_residual(family: FamilyId) -> RatFunc:
    """Residual of the stored recurrence against the fully symbolic summand."""
    rec = builtin_recurrence(family)
    if rec is None:
        raise ValueError(f"no stored recurrence for family {family.value}")
    return recurrence_residual(family_term(family), rec)


def specialize(rec: Recurrence, params: Mapping[str, Scalar]) -> Recurrence:
    """Substitute rational parameter values into a recurrence."""
    return Recurrence(r=rec.r, p1=rec.p1.subst(params), p2=rec.p2.subst(params),
                      cert=rec.cert.subst(params), family=rec.family)


def same_ratio(a: Recurrence, b: Recurrence) -> bool:
    """Whether two recurrences agree up to overall scaling of (p1, p2)."""
    return a.r == b.r and a.p1 * b.p2 == b.p1 * a.p2


# ---------------------------------------------------------------------------
# Polynomials in k over the rational-function field in n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KP:
    """Dense polynomial in k whose coefficients are NRat values."""

    coeffs: tuple[NRat, ...]

    @staticmethod
    def from_list(cs: Sequence[NRat]) -> "KP":
        out = list(cs)
        while out and out[-1].is_zero:
            out.pop()
        return KP(tuple(out))

    @staticmethod
    def zero() -> "KP":
        return KP(())

    @staticmethod
    def one() -> "KP":
        return KP((_NR1,))

    @staticmethod
    def k() -> "KP":
        return KP((_NR0, _NR1))

    @staticmethod
    def from_scalar(c: Scalar) -> "KP":
        return KP.from_list([NRat.const(c)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> NRat:
        return self.coeffs[-1] if self.coeffs else _NR0

    def coeff(self, i: int) -> NRat:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _NR0

    def __add__(self, other: "KP") -> "KP":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return KP.from_list(out)

    def __neg__(self) -> "KP":
        return KP(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "KP") -> "KP":
        return self + (-other)

    def __mul__(self, other: "KP") -> "KP":
        if self.is_zero or other.is_zero:
            return KP.zero()
        out = [_NR0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return KP.from_list(out)

    def scale(self, c: NRat) -> "KP":
        if c.is_zero:
            return KP.zero()
        return KP.from_list([a * c for a in self.coeffs])

    def shift(self, s: Scalar) -> "KP":
        """p(k + s) by Horner recomposition."""
        ks = KP((NRat.const(s), _NR1))
        out = KP.zero()
        for c in reversed(self.coeffs):
            out = out * ks + KP.from_list([c])
        return out

    def divmod(self, other: "KP") -> tuple["KP", "KP"]:
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        d = other.degree
        lead = other.lc
        q = [_NR0] * max(len(self.coeffs) - d, 0)
        rem = list(self.coeffs)
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + d]
            if c.is_zero:
                continue
            f = c / lead
            q[i] = f
            for j, oc in enumerate(other.coeffs):
                rem[i + j] = rem[i + j] - f * oc
        return KP.from_list(q), KP.from_list(rem[:d])

    def exact_div(self, other: "KP") -> "KP":
        q, rem = self.divmod(other)
        if not rem.is_zero:
            raise ValueError("non-exact polynomial division")
        return q

    def monic(self) -> "KP":
        if self.is_zero:
            return self
        return self.scale(_NR1 / self.lc)

    def gcd(self, other: "KP") -> "KP":
        """Monic gcd over the coefficient field."""
        a, b = self, other
        while not b.is_zero:
            _, rem = a.divmod(b)
            a, b = b, rem.monic() if not rem.is_zero else rem
        return a.monic()


def kp_from_multipoly(p: MultiPoly) -> KP:
    """Convert a polynomial in n and k into a KP."""
    extra = p.variables() - {"n", "k"}
    if extra:
        raise ValueError(f"unbound variable: {sorted(extra)[0]}")
    return KP.from_list([NRat.from_poly(c.as_unipoly("n")) for c in p.coeffs_in("k")])


def kp_pair_to_ratfunc(num: KP, den: KP) -> RatFunc:
    """Quotient of two KPs as a rational function in n and k."""
    lcden = UniPoly.one()
    for c in (*num.coeffs, *den.coeffs):
        g = lcden.gcd(c.den)
        lcden = lcden * c.den.exact_div(g)

    def side(kp: KP) -> MultiPoly:
        mp = MultiPoly.zero()
        for i, c in enumerate(kp.coeffs):
            if c.is_zero:
                continue
            u = c.num * lcden.exact_div(c.den)
            mp = mp + MultiPoly.from_unipoly(u, "n") * MultiPoly.var("k", i)
        return mp

    return RatFunc.new(side(num), side(den))


def _kp_prod(factors: Sequence[KP]) -> KP:
    out = KP.one()
    for f in factors:
        out = out * f
    return out


# ---------------------------------------------------------------------------
# Gosper normal form
# ---------------------------------------------------------------------------


def _nrat_const(v: NRat) -> Optional[Fraction]:
    """The constant value of an n-free NRat, else None."""
    if v.den.degree != 0 or v.num.degree > 0:
        return None
    if v.num.is_zero:
        return Fraction(0)
    return v.num.coeff(0) / v.den.coeff(0)


def _shift_candidates(num_factors: Sequence[KP], den_factors: Sequence[KP]) -> list[int]:
    """Nonnegative integer shifts j at which a num factor meets a den factor.

    For linear factors m1 k + u1 and m2 k + u2 the unique shift aligning
    their roots is j = u1/m1 - u2/m2; only n-free nonnegative integers
    can break the gcd condition of the normal form.
    """
    cands: set[int] = set()
    for a in num_factors:
        if a.degree != 1:
            continue
        ra = a.coeffs[0] / a.coeffs[1]
        for b in den_factors:
            if b.degree != 1:
                continue
            jv = _nrat_const(ra - b.coeffs[0] / b.coeffs[1])
            if jv is not None and jv.denominator == 1 and jv >= 0:
                cands.add(int(jv))
    return sorted(cands)


def _normal_form(q: KP, r: KP, candidates: Sequence[int]) -> tuple[KP, KP, KP]:
    """(P, Q, R) with q/r = (P(k+1)/P(k)) (Q(k)/R(k)), gcd(Q(k), R(k+j)) = 1."""
    p = KP.one()
    for j in candidates:
        while True:
            g = q.gcd(r.shift(j))
            if g.degree < 1:
                break
            q = q.exact_div(g)
            r = r.exact_div(g.shift(-j))
            for i in range(1, j + 1):
                p = p * g.shift(-i)
    return p, q, r


def _degree_bound(q: KP, rstar: KP, f_deg: int) -> int:
    """Upper bound for deg x in q(k) x(k+1) - rstar(k) x(k) = f(k)."""
    dq, dr = q.degree, rstar.degree
    if dq != dr or q.lc != rstar.lc:
        return f_deg - max(dq, dr)
    lead = q.lc
    a = q.coeff(dq - 1)
    b = rstar.coeff(dr - 1)
    sigma = _nrat_const((b - a) / lead)
    best = f_deg - dq + 1
    if sigma is not None and sigma.denominator == 1 and sigma >= 0:
        best = max(best, int(sigma))
    return best


# ---------------------------------------------------------------------------
# Exact nullspace over the rational-function field
# ---------------------------------------------------------------------------


def _nullspace(rows: list[list[NRat]]) -> list[list[NRat]]:
    """Basis of the right nullspace, computed fraction-free.

    Rows are cleared to polynomial entries, eliminated by Bareiss pivoting,
    and back-substituted over the field.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    mat: list[list[UniPoly]] = []
    for row in rows:
        lcden = UniPoly.one()
        for e in row:
            g = lcden.gcd(e.den)
            lcden = lcden * e.den.exact_div(g)
        mat.append([e.num * lcden.exact_div(e.den) for e in row])
    piv_cols: list[int] = []
    prev = UniPoly.one()
    rpos = 0
    for col in range(ncols):
        sel = next((i for i in range(rpos, len(mat)) if not mat[i][col].is_zero), None)
        if sel is None:
            continue
        mat[rpos], mat[sel] = mat[sel], mat[rpos]
        pv = mat[rpos][col]
        for i in range(rpos + 1, len(mat)):
            ci = mat[i][col]
            for j in range(col, ncols):
                mat[i][j] = (pv * mat[i][j] - ci * mat[rpos][j]).exact_div(prev)
        piv_cols.append(col)
        prev = pv
        rpos += 1
        if rpos == len(mat):
            break
    basis: list[list[NRat]] = []
    for fc in (c for c in range(ncols) if c not in piv_cols):
        vec = [_NR0] * ncols
        vec[fc] = _NR1
        for i in reversed(range(len(piv_cols))):
            pc = piv_cols[i]
            row = mat[i]
            s = _NR0
            for j in range(pc + 1, ncols):
                if not vec[j].is_zero and not row[j].is_zero:
                    s = s + NRat.from_poly(row[j]) * vec[j]
            vec[pc] = -s / NRat.from_poly(row[pc])
        basis.append(vec)
    return basis


# ---------------------------------------------------------------------------
# Parameterized derivation
# ---------------------------------------------------------------------------


def _require_instantiated(term: HypTerm) -> None:
    free = set()
    for g in term.gammas:
        free |= g.arg.variables()
    extra = free - {"n", "k"}
    if extra:
        raise ValueError(
            f"summand must be instantiated; free parameter {sorted(extra)[0]}")


def _telescoper_columns(q: KP, rstar: KP, deg: int) -> list[KP]:
    cols = []
    kpow = KP.one()
    for _ in range(deg + 1):
        cols.append(q * kpow.shift(1) - rstar * kpow)
        kpow = kpow * KP.k()
    return cols


def zeilberger_two_term(term: HypTerm, r: int, max_deg: int = 8,
                        family: Optional[FamilyId] = None) -> Optional[Recurrence]:
    """Derive a two-term recurrence with n-offset r, or None.

    The summand must have every parameter instantiated, leaving only n
    and k free.  max_deg caps the degree of the telescoper ansatz.
    """
    _require_instantiated(term)
    sk, nk, dk = k_ratio_parts(term)
    _, nn, dn = n_ratio_parts(term, r)
    nk_kp = [kp_from_multipoly(f) for f in nk]
    dk_kp = [kp_from_multipoly(f) for f in dk]
    nn_kp = [kp_from_multipoly(f) for f in nn]
    dn_kp = [kp_from_multipoly(f) for f in dn]
    num_factors = nk_kp + dn_kp
    den_factors = dk_kp + [f.shift(1) for f in dn_kp]
    cands = _shift_candidates(num_factors, den_factors)
    p, q, rr = _normal_form(_kp_prod(num_factors).scale(NRat.const(sk)),
                            _kp_prod(den_factors), cands)
    n_n = _kp_prod(nn_kp)
    d_n = _kp_prod(dn_kp)
    rhs1 = p * n_n
    rhs2 = p * d_n
    rstar = rr.shift(-1)
    bound = _degree_bound(q, rstar, max(rhs1.degree, rhs2.degree)) + 1
    if bound < 0:
        return None
    deg = min(bound, max_deg)
    cols = _telescoper_columns(q, rstar, deg) + [-rhs1, -rhs2]
    nrows = max(c.degree for c in cols) + 1
    rows = [[c.coeff(m) for c in cols] for m in range(nrows)]
    vecs = [v for v in _nullspace(rows)
            if not (v[-1].is_zero and v[-2].is_zero)]
    if not vecs:
        return None
    vec = next((v for v in vecs if not v[-1].is_zero), vecs[0])
    x = KP.from_list(vec[:deg + 1])
    p1n, p2n = vec[-2], vec[-1]
    rec = _assemble(x, p1n, p2n, rstar, p, d_n, r, family)
    if not verify_recurrence(term, rec):
        raise RuntimeError("derived recurrence failed exact re-verification")
    return rec


def _assemble(x: KP, p1n: NRat, p2n: NRat, rstar: KP, p: KP, d_n: KP,
              r: int, family: Optional[FamilyId]) -> Recurrence:
    """Rescale a raw solution to the canonical polynomial pair and build it.

    The pair (p1, p2) is scaled to integer polynomials whose contents are
    coprime, with positive leading coefficient on p2 (on p1 when p2 = 0);
    the certificate R(k-1) x(k) / (P(k) Dn(k)) carries the same factor.
    """
    if p2n.is_zero:
        p1_uni = p1n.num.primitive()
        p2_uni = UniPoly.zero()
        scale = NRat.from_poly(p1_uni) / p1n
    else:
        t = p1n / p2n
        v = t.num.content().denominator if not t.num.is_zero else 1
        p1_uni = t.num.scale(v)
        p2_uni = t.den.scale(v)
        scale = NRat.from_poly(p2_uni) / p2n
    cert = kp_pair_to_ratfunc((rstar * x).scale(scale), p * d_n)
    return Recurrence(
        r=r,
        p1=MultiPoly.from_unipoly(p1_uni, "n"),
        p2=MultiPoly.from_unipoly(p2_uni, "n"),
        cert=cert,
        family=family,
    )


def derive_recurrence(term: HypTerm, max_deg: int = 8,
                      shifts: Sequence[int] = (1, 2),
                      family: Optional[FamilyId] = None) -> Optional[Recurrence]:
    """Search n-offsets in order and return the first recurrence found."""
    for r in shifts:
        rec = zeilberger_two_term(term, r, max_deg=max_deg, family=family)
        if rec is not None:
            return rec
    return None


# ---------------------------------------------------------------------------
# Plain Gosper summation over the rationals
# ---------------------------------------------------------------------------


def _upoly_det(mat: list[list[UniPoly]]) -> UniPoly:
    """Fraction-free determinant of a square polynomial matrix."""
    n = len(mat)
    m = [row[:] for row in mat]
    prev = UniPoly.one()
    sign = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if not m[i][c].is_zero), None)
        if piv is None:
            return UniPoly.zero()
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]).exact_div(prev)
            m[i][c] = UniPoly.zero()
        prev = m[c][c]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def _integer_root_shifts(a: UniPoly, b: UniPoly) -> list[int]:
    """Nonnegative integers j with gcd(a(k), b(k+j)) nonconstant.

    Computed as the integer roots of the resultant of a(k) and b(k+j)
    taken in k, a polynomial in j.
    """
    if a.degree < 1 or b.degree < 1:
        return []
    da, db = a.degree, b.degree
    bj = []
    for t in range(db + 1):
        bj.append(UniPoly.from_coeffs(
            [b.coeff(s) * comb(s, t) for s in range(t, db + 1)]))
    size = da + db
    mat = [[UniPoly.zero()] * size for _ in range(size)]
    for i in range(db):
        for t in range(da + 1):
            mat[i][i + t] = UniPoly.constant(a.coeff(da - t))
    for i in range(da):
        for t in range(db + 1):
            mat[db + i][i + t] = bj[db - t]
    det = _upoly_det(mat)
    if det.is_zero:
        raise ArithmeticError("degenerate shift resultant")
    return sorted({int(r) for r in rational_roots(det)
                   if r.denominator == 1 and r >= 0})


def gosper(ratio: RatFunc, max_deg: int = 8) -> Optional[RatFunc]:
    """Certificate R with R(k+1) ratio(k) - R(k) = 1, or None.

    ratio is the term quotient t(k+1)/t(k) of a hypergeometric sequence;
    a returned R makes g = R * t an exact antidifference of t.
    """
    free = ratio.num.variables() | ratio.den.variables()
    if not free <= {"k"}:
        raise ValueError("ratio must be univariate in k")
    nu = ratio.num.as_unipoly("k")
    de = ratio.den.as_unipoly("k")
    cands = _integer_root_shifts(nu, de)
    p, q, rr = _normal_form(kp_from_multipoly(ratio.num),
                            kp_from_multipoly(ratio.den), cands)
    rstar = rr.shift(-1)
    bound = _degree_bound(q, rstar, p.degree) + 1
    if bound < 0:
        return None
    deg = min(bound, max_deg)
    cols = _telescoper_columns(q, rstar, deg) + [-p]
    nrows = max(c.degree for c in cols) + 1
    rows = [[c.coeff(m) for c in cols] for m in range(nrows)]
    vecs = [v for v in _nullspace(rows) if not v[-1].is_zero]
    if not vecs:
        return None
    vec = vecs[0]
    inv = _NR1 / vec[-1]
    x = KP.from_list([c * inv for c in vec[:deg + 1]])
    cert = kp_pair_to_ratfunc(rstar * x, p)
    check = cert.shift_var("k", 1) * ratio - cert - RatFunc.const(1)
    if not check.is_zero:
        raise RuntimeError("derived certificate failed exact re-verification")
    return cert
