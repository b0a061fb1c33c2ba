"""Minimal tableaux, the entry-toggling involution, and pairing certificates.

The involution compares a set-valued tableau against the minimal tableau of
its shape, finds the first box (in column-major order) where they differ,
and either deletes the minimal cell's content from that box or inserts it.
Pairing all non-minimal tableaux this way, and pairing minimal tableaux of
neighboring inner shapes via the bottom-row toggle, covers the double-skew
tableau family with no element left over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .enumeration import EnumSpec, enumerate_fillings
from .shapes import (Box, SkewShape, StrictPartition, boxes_in_order,
                     boxes_row_major, is_subpartition, removable_boxes,
                     remove_subset)
from .tableaux import Filling, primed, validate


def minimal_tableau(shape: SkewShape, family: str, n: int) -> Filling:
    """The single-valued tableau minimizing the total numeric entry value.

    Greedy row-major fill: each box takes the smallest entry code allowed
    by its left and top neighbors, the row/column multiplicity rules, and
    (family P) the unprimed-diagonal rule.
    """
    cells: dict[Box, tuple[int, ...]] = {}
    row_primed: dict[int, set[int]] = {}
    col_unprimed: dict[int, set[int]] = {}
    for box in boxes_row_major(shape):
        i, j = box
        lo = 1
        if (i, j - 1) in shape:
            lo = max(lo, cells[(i, j - 1)][-1])
        if (i - 1, j) in shape:
            lo = max(lo, cells[(i - 1, j)][-1])
        choice = None
        for code in range(lo, 2 * n + 1):
            if primed(code):
                if family == "P" and i == j:
                    continue
                if code in row_primed.get(i, ()):
                    continue
            elif code in col_unprimed.get(j, ()):
                continue
            choice = code
            break
        if choice is None:
            raise ValueError(f"empty tableau set for {shape}, {family}, n={n}")
        cells[box] = (choice,)
        if primed(choice):
            row_primed.setdefault(i, set()).add(choice)
        else:
            col_unprimed.setdefault(j, set()).add(choice)
    return Filling(shape, n, family, cells)


def iota(T: Filling) -> Filling:
    """Toggle the minimal cell content at the first differing box."""
    tmin = minimal_tableau(T.shape, T.family, T.n)
    for box in boxes_in_order(T.shape):
        if T.cells[box] != tmin.cells[box]:
            break
    else:
        raise ValueError("iota is undefined on the minimal tableau")
    have = set(T.cells[box])
    mincell = set(tmin.cells[box])
    new = have - mincell if have & mincell else have | mincell
    return T.with_cell(box, tuple(sorted(new)))


class InvolutionReport(NamedTuple):
    shape: str
    family: str
    n: int
    checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_involution(shape: SkewShape, family: str, n: int) -> InvolutionReport:
    """Exhaustively check the involution properties on one tableau set."""
    tmin = minimal_tableau(shape, family, n)
    violations = []
    checked = 0
    for T in enumerate_fillings(EnumSpec(shape, n, family, "set-valued")):
        if T == tmin:
            continue
        checked += 1
        image = iota(T)
        if not validate(image):
            violations.append(f"iota image of {T!r} is invalid")
            continue
        if image == T:
            violations.append(f"iota fixes {T!r}")
        if image == tmin:
            violations.append(f"iota of {T!r} hits the minimal tableau")
        if abs(image.size() - T.size()) != 1:
            violations.append(f"iota of {T!r} changes |T| by != 1")
        if iota(image) != T:
            violations.append(f"iota is not an involution at {T!r}")
    return InvolutionReport(str(shape), family, n, checked, tuple(violations))


@dataclass(frozen=True)
class NuSubsetState:
    """A subset of the removable boxes of mu, with the shrunk partition."""

    base: StrictPartition
    chosen: frozenset[Box] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "chosen", frozenset(self.chosen))
        if not self.chosen <= removable_boxes(self.base):
            raise ValueError("chosen boxes must be removable")

    @property
    def nu(self) -> StrictPartition:
        return remove_subset(self.base, self.chosen)

    @property
    def b(self) -> int:
        return len(self.chosen)


def bottom_removable_box(mu: StrictPartition) -> Box:
    """The removable box in the last row of mu (always present)."""
    return (mu.length, mu.part(mu.length) + mu.length - 1)


def pi(state: NuSubsetState) -> NuSubsetState:
    """Toggle membership of the bottom-row removable box."""
    corner = bottom_removable_box(state.base)
    return NuSubsetState(state.base, state.chosen ^ {corner})


class Pair(NamedTuple):
    left: dict
    right: dict
    tag: str  # "iota" or "pi"


@dataclass
class PairingCertificate:
    lam: StrictPartition
    mu: StrictPartition
    n: int
    family: str
    minimal_only: bool
    pairs: list[Pair] = field(default_factory=list)
    leftover: list[dict] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.leftover

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "mu": list(self.mu.parts),
            "n": self.n,
            "family": self.family,
            "minimal_only": self.minimal_only,
            "pairs": [
                {"left": p.left, "right": p.right, "tag": p.tag}
                for p in self.pairs
            ],
            "leftover": list(self.leftover),
        }


def _element(nu: StrictPartition, T: Filling) -> dict:
    return {"nu": list(nu.parts), "tableau": T.to_json()}


def pairing_certificate(lam: StrictPartition, mu: StrictPartition, n: int,
                        family: str, minimal_only: bool = False,
                        max_boxes: int = 12) -> PairingCertificate:
    """Match every tableau of the double-skew family with a partner.

    Non-minimal tableaux pair with their involution image (tag "iota");
    the minimal tableau of lam/nu pairs with the minimal tableau of the
    inner shape reached by toggling the bottom-row removable box (tag
    "pi").  With minimal_only=True only the pi pairs are produced, which
    stays feasible for large shapes.
    """
    if not mu or not is_subpartition(mu, lam):
        raise ValueError("need a nonempty mu contained in lam")
    rem = sorted(removable_boxes(mu))
    if not minimal_only and lam.weight - mu.weight + len(rem) > max_boxes:
        raise ValueError("infeasible scale; use minimal_only")
    cert = PairingCertificate(lam, mu, n, family, minimal_only)
    states = []
    for mask in range(1 << len(rem)):
        chosen = frozenset(rem[k] for k in range(len(rem)) if mask >> k & 1)
        states.append(NuSubsetState(mu, chosen))

    minimal = {s.chosen: minimal_tableau(SkewShape(lam, s.nu), family, n)
               for s in states}
    done_pi = set()
    for s in states:
        if s.chosen in done_pi:
            continue
        t = pi(s)
        cert.pairs.append(Pair(_element(s.nu, minimal[s.chosen]),
                               _element(t.nu, minimal[t.chosen]), "pi"))
        done_pi.update({s.chosen, t.chosen})
    if minimal_only:
        return cert

    for s in states:
        shape = SkewShape(lam, s.nu)
        tmin = minimal[s.chosen]
        seen = set()
        for T in enumerate_fillings(EnumSpec(shape, n, family, "set-valued")):
            if T == tmin or T in seen:
                continue
            partner = iota(T)
            seen.update({T, partner})
            if partner == T or iota(partner) != T:
                cert.leftover.append(_element(s.nu, T))
                continue
            cert.pairs.append(Pair(_element(s.nu, T),
                                   _element(s.nu, partner), "iota"))
    return cert


def certificate_covers(cert: PairingCertificate,
                       elements: list[dict]) -> tuple[bool, str | None]:
    """Check that a certificate matches each given element exactly once."""
    import json

    def key(e):
        return json.dumps(e, sort_keys=True)

    seen: dict[str, int] = {}
    for p in cert.pairs:
        l, r = key(p.left), key(p.right)
        if l == r:
            return False, f"self-pair {l}"
        seen[l] = seen.get(l, 0) + 1
        seen[r] = seen.get(r, 0) + 1
    want = {key(e) for e in elements}
    if set(seen) != want:
        return False, "paired elements differ from the enumerated family"
    if any(v != 1 for v in seen.values()):
        return False, "an element appears in more than one pair"
    if cert.leftover:
        return False, "nonempty leftover"
    return True, None
