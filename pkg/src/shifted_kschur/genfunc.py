"""Schur P/Q and their K-theoretic GP/GQ variants as exact polynomials.

Everything here folds the enumeration stream into a sparse polynomial; the
double-skew functions additionally sum over inner shapes obtained by
deleting subsets of removable boxes, and the shortcut path evaluates that
sum symbolically without touching any tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .enumeration import EnumSpec, count, enumerate_fillings
from .polyring import LaurentPoly
from .shapes import (SkewShape, StrictPartition, is_subpartition,
                     remove_subset, removable_boxes, strict_subpartitions)

FAMILIES = ("P", "Q", "GP", "GQ", "GPdouble", "GQdouble")

COPRODUCT_MAX_WEIGHT = 6


@dataclass(frozen=True)
class FunctionSpec:
    family: str
    shape: SkewShape
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @property
    def base_family(self) -> str:
        return "P" if self.family in ("P", "GP", "GPdouble") else "Q"


def _tableau_sum(shape: SkewShape, n: int, family: str, kind: str,
                 with_beta: bool) -> LaurentPoly:
    spec = EnumSpec(shape, n, family, kind)
    terms: dict = {}
    base = shape.size
    for f in enumerate_fillings(spec):
        key = (f.weight(), f.size() - base if with_beta else 0)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(n, terms)


def compute(spec: FunctionSpec) -> LaurentPoly:
    """The polynomial of the requested family on the given shape."""
    fam, shape, n = spec.family, spec.shape, spec.n
    if fam in ("P", "Q"):
        return _tableau_sum(shape, n, fam, "single", with_beta=False)
    if fam in ("GP", "GQ"):
        return _tableau_sum(shape, n, spec.base_family, "set-valued",
                            with_beta=True)
    # double-skew: sum over inner shapes nu = mu minus a removable subset
    lam, mu = shape.outer, shape.inner
    if not is_subpartition(mu, lam):
        return LaurentPoly.zero(n)
    total = LaurentPoly.zero(n)
    for b, nu in _nu_terms(mu):
        skew = _tableau_sum(SkewShape(lam, nu), n, spec.base_family,
                            "set-valued", with_beta=True)
        total = total + skew.scalar_beta_power(b)
    return total


def _nu_terms(mu: StrictPartition) -> Iterator[tuple[int, StrictPartition]]:
    """Pairs (|mu/nu|, nu) over all nu = mu minus a subset of Rem(mu)."""
    if not mu:
        yield 0, mu
        return
    rem = sorted(removable_boxes(mu))
    for mask in range(1 << len(rem)):
        B = {rem[k] for k in range(len(rem)) if mask >> k & 1}
        yield len(B), remove_subset(mu, B)


def beta_zero(spec: FunctionSpec) -> LaurentPoly:
    """The b^0 slice of GP/GQ; equals the matching P/Q polynomial."""
    if spec.family not in ("GP", "GQ"):
        raise ValueError("beta_zero applies to GP and GQ only")
    return compute(spec).beta_slice(0)


def special_value(spec: FunctionSpec) -> LaurentPoly:
    """Replace the parameter b by -1/b and every x_i by b.

    The parameter flip must happen first: each term c*x^a*b^e becomes
    c*(-1)^e*x^a*b^-e and only then do the x's collapse onto b, yielding
    c*(-1)^e*b^(|a|-e).
    """
    if spec.family not in ("GP", "GQ", "GPdouble", "GQdouble"):
        raise ValueError("special_value applies to the K-theoretic families")
    return compute(spec).subst_beta_neg_inverse().subst_x_to_beta()


def signed_count(spec: FunctionSpec) -> int:
    """Sum of (-1)^(|T| - #boxes) over all set-valued tableaux."""
    if spec.family not in ("GP", "GQ"):
        raise ValueError("signed_count applies to GP and GQ only")
    enum = EnumSpec(spec.shape, spec.n, spec.base_family, "set-valued")
    base = spec.shape.size
    return sum(-1 if (f.size() - base) % 2 else 1
               for f in enumerate_fillings(enum))


class NuTerm(NamedTuple):
    nu: StrictPartition
    removed: int  # |mu/nu|
    sign: int     # (-1)^removed


class DoubleSkewShortcut(NamedTuple):
    value: LaurentPoly
    terms: tuple[NuTerm, ...]


def double_skew_shortcut(lam: StrictPartition,
                         mu: StrictPartition) -> DoubleSkewShortcut:
    """The special value of the double-skew function, no tableaux involved.

    Each admissible nu contributes (-1/b)^|mu/nu| * b^|lam/nu|, which is
    (-1)^|mu/nu| * b^(|lam|-|mu|); the signs cancel pairwise whenever mu is
    nonempty.  Returns 0 outright when mu is not contained in lam.
    """
    if not is_subpartition(mu, lam):
        return DoubleSkewShortcut(LaurentPoly.zero(1), ())
    if not mu:
        return DoubleSkewShortcut(LaurentPoly.beta(1, lam.weight), ())
    total = LaurentPoly.zero(1)
    terms = []
    for b, nu in _nu_terms(mu):
        sign = -1 if b % 2 else 1
        terms.append(NuTerm(nu, b, sign))
        total = total + LaurentPoly.beta(1, lam.weight - mu.weight).scale(sign)
    terms.sort(key=lambda t: (t.removed, t.nu.parts))
    return DoubleSkewShortcut(total, tuple(terms))


class CoproductReport(NamedTuple):
    ok: bool
    residual: LaurentPoly
    lhs: LaurentPoly
    rhs: LaurentPoly


def _embed(p: LaurentPoly, total: int, offset: int) -> LaurentPoly:
    """Reindex a polynomial in p.nvars variables into slots offset.. of total."""
    terms = {}
    for (xexp, bexp), c in p.terms.items():
        full = (0,) * offset + xexp + (0,) * (total - offset - len(xexp))
        terms[(full, bexp)] = c
    return LaurentPoly(total, terms)


def coproduct_check(lam: StrictPartition, n_x: int, n_y: int,
                    family: str) -> CoproductReport:
    """Compare F_lam(x,y) with the sum over nu of F_nu(x) * F_(lam over nu)(y).

    For P and Q the right factor is the plain skew function over nu inside
    lam; for GP and GQ it is the double-skew function, summed over all
    strict nu with at most n_x rows and first part at most lam_1 (terms
    with nu outside lam vanish).
    """
    if family not in ("P", "Q", "GP", "GQ"):
        raise ValueError(f"coproduct families are P, Q, GP, GQ; got {family!r}")
    if lam.weight > COPRODUCT_MAX_WEIGHT:
        raise ValueError("coproduct guard exceeded: |lambda| too large")
    total = n_x + n_y
    lhs = compute(FunctionSpec(family, SkewShape(lam), total))
    rhs = LaurentPoly.zero(total)
    if family in ("P", "Q"):
        inner_family = family
        nus = list(strict_subpartitions(lam))
    else:
        inner_family = family + "double"
        nus = [nu for nu in strict_subpartitions(lam) if nu.length <= n_x]
    for nu in nus:
        left = compute(FunctionSpec(family, SkewShape(nu), n_x))
        if not left:
            continue
        right = compute(FunctionSpec(inner_family, SkewShape(lam, nu), n_y))
        rhs = rhs + _embed(left, total, 0) * _embed(right, total, n_x)
    residual = lhs - rhs
    return CoproductReport(not residual, residual, lhs, rhs)


class ParityReport(NamedTuple):
    count: int
    is_odd: bool


def parity_report(spec: FunctionSpec) -> ParityReport:
    """Count of the underlying set-valued tableau set with its parity."""
    if spec.family not in ("GP", "GQ"):
        raise ValueError("parity_report applies to GP and GQ only")
    c = count(EnumSpec(spec.shape, spec.n, spec.base_family, "set-valued"))
    return ParityReport(c, c % 2 == 1)
