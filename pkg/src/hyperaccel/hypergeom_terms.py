"""Hypergeometric summand model and the eleven built-in summand families.

Representation: a summand F(n, k) is a `HypTerm`, a product of Gamma-function
factors with integer exponents and an optional alternating sign (-1)^k.  Each
`GammaFactor` stores the Gamma argument as an affine `MultiPoly` in the
parameter variables a-f and the indices n, k.  Pochhammer symbols and binomial
coefficients are expressed through Gamma factors, so a shift of either index
turns into a finite product of affine polynomials and every term ratio is an
exact rational function.

`k_shift_ratio` gives F(n, k+1)/F(n, k) and `n_shift_ratio` gives
F(n+r, k)/F(n, k); both are returned as `RatFunc` and are also available in
factored form for the recurrence solver.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from hyperaccel.exact_arith import MultiPoly, RatFunc, Rational, Scalar

_ONE = MultiPoly.one()


@dataclass(frozen=True)
class GammaFactor:
    """Gamma(arg) ** exponent with an affine polynomial argument."""

    arg: MultiPoly
    exponent: int

    def __post_init__(self) -> None:
        if self.arg.total_degree() > 1:
            raise ValueError("Gamma argument must be affine")


@dataclass(frozen=True)
class HypTerm:
    """Product of Gamma factors times sign_base**k, sign_base in {1, -1}."""

    gammas: tuple[GammaFactor, ...]
    sign_base: int = 1

    def __post_init__(self) -> None:
        if self.sign_base not in (1, -1):
            raise ValueError("sign_base must be 1 or -1")

    def subst(self, point: Mapping[str, Scalar]) -> "HypTerm":
        return HypTerm(
            tuple(GammaFactor(g.arg.subst(point), g.exponent) for g in self.gammas),
            self.sign_base,
        )


def _var_coeff(p: MultiPoly, name: str) -> Fraction:
    """Coefficient of a variable in an affine polynomial."""
    cs = p.coeffs_in(name)
    if len(cs) < 2:
        return Fraction(0)
    c = cs[1]
    if c.variables():
        raise ValueError("Gamma argument must be affine")
    return c.eval({})


def _gamma_shift_factors(arg: MultiPoly, step: Fraction) -> tuple[list[MultiPoly], int]:
    """Factors of Gamma(arg + step)/Gamma(arg) and their side (+1 num, -1 den)."""
    if step.denominator != 1:
        raise ValueError("non-integer Gamma argument shift")
    s = int(step)
    if s > 0:
        return [arg + MultiPoly.const(i) for i in range(s)], +1
    if s < 0:
        return [arg - MultiPoly.const(i) for i in range(1, -s + 1)], -1
    return [], +1


def _cancel_common(num: list[MultiPoly], den: list[MultiPoly]) -> tuple[list[MultiPoly], list[MultiPoly]]:
    """Remove structurally identical factor pairs."""
    out_den = list(den)
    out_num = []
    for p in num:
        if p in out_den:
            out_den.remove(p)
        else:
            out_num.append(p)
    return out_num, out_den


def _ratio_parts(term: HypTerm, index: str, step: int) -> tuple[Fraction, list[MultiPoly], list[MultiPoly]]:
    """Sign and affine factor lists of F(..., index + step, ...)/F(..., index, ...)."""
    num: list[MultiPoly] = []
    den: list[MultiPoly] = []
    for g in term.gammas:
        coeff = _var_coeff(g.arg, index)
        shift = coeff * step
        if shift.denominator != 1:
            raise ValueError(
                "not hypergeometric in k" if index == "k"
                else f"not hypergeometric in n with shift {step}"
            )
        factors, side = _gamma_shift_factors(g.arg, shift)
        target = num if side * g.exponent > 0 else den
        for p in factors:
            for _ in range(abs(g.exponent)):
                target.append(p)
    num, den = _cancel_common(num, den)
    sign = Fraction(term.sign_base ** (step % 2)) if index == "k" else Fraction(1)
    return sign, num, den


def k_ratio_parts(term: HypTerm) -> tuple[Fraction, list[MultiPoly], list[MultiPoly]]:
    """Factored form of F(n, k+1)/F(n, k)."""
    return _ratio_parts(term, "k", 1)


def n_ratio_parts(term: HypTerm, r: int) -> tuple[Fraction, list[MultiPoly], list[MultiPoly]]:
    """Factored form of F(n+r, k)/F(n, k)."""
    return _ratio_parts(term, "n", r)


def _parts_to_ratfunc(parts: tuple[Fraction, list[MultiPoly], list[MultiPoly]]) -> RatFunc:
    sign, num, den = parts
    np, dp = MultiPoly.const(sign), _ONE
    for p in num:
        np = np * p
    for p in den:
        dp = dp * p
    return RatFunc.new(np, dp)


def k_shift_ratio(term: HypTerm) -> RatFunc:
    """F(n, k+1)/F(n, k) as an exact rational function."""
    return _parts_to_ratfunc(k_ratio_parts(term))


def n_shift_ratio(term: HypTerm, r: int) -> RatFunc:
    """F(n+r, k)/F(n, k) as an exact rational function."""
    if r < 1:
        raise ValueError("n-shift must be a positive integer")
    return _parts_to_ratfunc(n_ratio_parts(term, r))


# ---------------------------------------------------------------------------
# Built-in families
# ---------------------------------------------------------------------------


class FamilyId(enum.Enum):
    QUARTER = "quarter"
    NEG_QUARTER = "neg-quarter"
    NEG_27 = "neg-27"
    FOUR_27 = "four-27"
    SIXTEEN_27_A = "sixteen-27-a"
    SIXTEEN_27_B = "sixteen-27-b"
    SIXTY4_A = "sixty4-a"
    SIXTY4_B = "sixty4-b"
    TWENTY7_64 = "twenty7-64"
    NEG_64 = "neg-64"
    TWENTY7_32 = "twenty7-32"

    @property
    def arity(self) -> int:
        """Length of the parameter tuple including the index n."""
        return _ARITY[self]

    @property
    def param_names(self) -> tuple[str, ...]:
        return _PARAM_NAMES[self]


_ARITY = {
    FamilyId.QUARTER: 7,
    FamilyId.NEG_QUARTER: 4,
    FamilyId.NEG_27: 5,
    FamilyId.FOUR_27: 4,
    FamilyId.SIXTEEN_27_A: 3,
    FamilyId.SIXTEEN_27_B: 3,
    FamilyId.SIXTY4_A: 4,
    FamilyId.SIXTY4_B: 4,
    FamilyId.TWENTY7_64: 4,
    FamilyId.NEG_64: 4,
    FamilyId.TWENTY7_32: 3,
}

_PARAM_NAMES = {
    fam: ("a", "b", "c", "d", "e", "f")[: _ARITY[fam] - 1] for fam in FamilyId
}


def _A(text: str) -> MultiPoly:
    return MultiPoly.from_string(text)


def _poch(base: str, index: str, exponent: int) -> list[GammaFactor]:
    """(base)_index = Gamma(base + index)/Gamma(base), with given exponent."""
    b, i = _A(base), _A(index)
    return [GammaFactor(b + i, exponent), GammaFactor(b, -exponent)]


def _binom_n_k() -> list[GammaFactor]:
    """C(n, k) = Gamma(n+1) / (Gamma(k+1) Gamma(n-k+1))."""
    return [
        GammaFactor(_A("n + 1"), 1),
        GammaFactor(_A("k + 1"), -1),
        GammaFactor(_A("n + 1") - _A("k"), -1),
    ]


def _term(factors: list[GammaFactor], sign: int = 1) -> HypTerm:
    return HypTerm(tuple(factors), sign)


def family_term(family: FamilyId) -> HypTerm:
    """The family summand with symbolic parameters."""
    if family is FamilyId.QUARTER:
        return _term(
            _poch("a", "k + f", 1) + _poch("b", "k + e", 1)
            + _poch("n", "k + d", -1) + _poch("n", "k + c", -1)
        )
    if family is FamilyId.NEG_QUARTER:
        return _term(
            _poch("a", "k + c", 1) + _poch("b", "k + c", 1)
            + _poch("a + n", "k", -1) + _poch("b + n", "k", -1),
            sign=-1,
        )
    if family is FamilyId.NEG_27:
        return _term(
            _poch("a", "k", 1) + _poch("n", "k + d", 1)
            + _poch("2n", "k + c", -1) + _poch("2n", "k + b", -1)
        )
    if family is FamilyId.FOUR_27:
        return _term(
            _poch("a", "k", 1) + _poch("b", "k", 1)
            + _poch("n", "k", -1) + _poch("2n", "c + k", -1)
        )
    if family is FamilyId.SIXTEEN_27_A:
        return _term(
            _binom_n_k() + _poch("1", "k", 1) + _poch("3n + b", "k + a", -1)
        )
    if family is FamilyId.SIXTEEN_27_B:
        return _term(
            _binom_n_k() + _poch("2", "k", 1) + _poch("3n + b", "a + k", -1)
        )
    if family is FamilyId.SIXTY4_A:
        return _term(
            _poch("a", "k", 1) + _poch("2n", "k", 1)
            + _poch("3n", "b + k", -1) + _poch("3n", "c + k", -1)
        )
    if family is FamilyId.SIXTY4_B:
        return _term(
            _poch("n", "k", 1) + _poch("n", "k + c", 1)
            + _poch("2n", "k + b", -1) + _poch("2n", "k + a", -1)
        )
    if family is FamilyId.TWENTY7_64:
        return _term(
            _poch("n", "k", 1) + _poch("2n", "k", 1)
            + _poch("4n", "b + k", -1) + _poch("a + n", "c + k", -1)
        )
    if family is FamilyId.NEG_64:
        return _term(
            _poch("a", "k", 1) + _poch("n", "k", 1)
            + _poch("3n", "b + k", -1) + _poch("2n", "c + k", -1)
        )
    if family is FamilyId.TWENTY7_32:
        return _term(
            _binom_n_k() + _poch("1", "k", 1) + _poch("2k + b", "k + a", -1)
        )
    raise ValueError(f"unknown family {family!r}")


def family_instantiate(family: FamilyId, params: Sequence[Rational]) -> HypTerm:
    """Substitute rational parameter values; n and k stay symbolic."""
    names = family.param_names
    if len(params) != len(names):
        raise ValueError(
            f"family {family.value} expects {len(names)} parameters, got {len(params)}"
        )
    point = {name: Fraction(v) for name, v in zip(names, params)}
    return family_term(family).subst(point)


def alt_control_single_offset(a: Rational, b: Rational, c: Rational) -> HypTerm:
    """(-1)^k (a)_k (b)_k / ((a+n)_k (b+n)_{k+c}), instantiated.

    An alternating companion with one shifted lower offset; it admits no
    two-term recurrence at unit n-offset and serves as a derivation control.
    """
    term = _term(
        _poch("a", "k", 1) + _poch("b", "k", 1)
        + _poch("a + n", "k", -1) + _poch("b + n", "k + c", -1),
        sign=-1,
    )
    return term.subst({"a": Fraction(a), "b": Fraction(b), "c": Fraction(c)})


def alt_control_double_offset(a: Rational, b: Rational, c: Rational,
                              d: Rational) -> HypTerm:
    """(-1)^k (a)_k (b)_k / ((a+n)_{k+d} (b+n)_{k+c}), instantiated.

    The two-offset alternating companion; also recurrence-free at unit
    n-offset and used as a derivation control.
    """
    term = _term(
        _poch("a", "k", 1) + _poch("b", "k", 1)
        + _poch("a + n", "k + d", -1) + _poch("b + n", "k + c", -1),
        sign=-1,
    )
    return term.subst({"a": Fraction(a), "b": Fraction(b), "c": Fraction(c),
                       "d": Fraction(d)})
