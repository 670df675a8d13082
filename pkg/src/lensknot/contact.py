"""The tight contact structures on L(m, 1) and their interaction with
simple-knot tau invariants.

L(m, 1) carries exactly m - 1 tight contact structures, obtained by
Legendrian surgery on Legendrian unknots with Thurston-Bennequin invariant
-m + 1 and rotation numbers m - 2, m - 4, ..., 2 - m.  Such a surgery bounds
a Stein domain W built from a single (-m)-framed 2-handle, so

    chi(W) = 2,  sigma(W) = -1,  c1^2(W, J) = -rot^2 / m

(the intersection form is the rank-one form (-m), and c1 evaluates to rot on
the generator, giving c1^2 = rot^2 / (-m)).  The Hopf invariant of the
induced plane field is h = c1^2 - 2*chi - 3*sigma = -rot^2/m - 1, and the
correction term of the structure's Spin^c class is d = -h/4 - 1/2.

Matching a structure to a Spin^c label goes through the d-value only; when
several labels share the value, the match (and hence the tau value set) is
reported as ambiguous rather than resolved by fiat.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import InvalidInputError, InvariantViolationError
from .exactq import format_rat
from .lens import LensSpace, correction_terms
from .simpleknot import SimpleKnot, tau_table


@dataclass(frozen=True)
class TightContact:
    """One of the m - 1 tight contact structures on L(m, 1).

    ``index`` runs from 1 to m - 1; the surgery description is a Legendrian
    unknot with tb = -m + 1 and rot = m - 2*index.  ``matched_labels`` and
    ``tau_values`` are filled once the structure has been matched against a
    knot's Spin^c chart.
    """

    m: int
    index: int
    tb: int
    rot: int
    hopf: Fraction
    d_xi: Fraction
    matched_labels: tuple[int, ...] | None = None
    tau_values: tuple[Fraction, ...] | None = None

    @property
    def ambiguous(self) -> bool:
        return self.tau_values is not None and len(self.tau_values) > 1


def hopf_invariant(m: int, rot: int) -> Fraction:
    """Hopf invariant of the surgered structure: -rot^2 / m - 1."""
    if m < 2:
        raise InvalidInputError(f"m must be >= 2, got {m}")
    if abs(rot) > m - 2 or (rot - m) % 2 != 0:
        raise InvalidInputError(
            f"rotation number {rot} not realized on L({m},1): "
            f"need |rot| <= {m - 2} and rot = m (mod 2)")
    return Fraction(-rot * rot, m) - 1


def contact_d(h: Fraction) -> Fraction:
    """Correction term of a contact structure from its Hopf invariant."""
    return -Fraction(h) / 4 - Fraction(1, 2)


def enumerate_tight(m: int) -> list[TightContact]:
    """All m - 1 tight contact structures on L(m, 1), by index."""
    if not isinstance(m, int) or m < 2:
        raise InvalidInputError(f"m must be an integer >= 2, got {m}")
    out = []
    for i in range(1, m):
        rot = m - 2 * i
        h = hopf_invariant(m, rot)
        out.append(
            TightContact(m=m, index=i, tb=-m + 1, rot=rot, hopf=h, d_xi=contact_d(h)))
    return out


def tau_xi(structure: TightContact, knot: SimpleKnot) -> set[Fraction]:
    """tau values of the knot in the Spin^c classes matching the structure.

    The match is by correction term: every label whose d equals the
    structure's d.  A singleton is a definitive tau; a larger set means the
    d-value alone does not pin the Spin^c class and is reported as such.
    An empty match would contradict the classification and aborts.
    """
    space = knot.space
    if structure.m != space.p or space.q != 1:
        raise InvalidInputError(
            f"structure lives on L({structure.m},1), knot in {space}")
    table = correction_terms(space)
    matched = [i for i in space.labels() if table[i] == structure.d_xi]
    if not matched:
        raise InvariantViolationError(
            f"no Spin^c class of {space} has d = {structure.d_xi}")
    tau = tau_table(knot)
    return {tau[i] for i in matched}


def match_structure(structure: TightContact, knot: SimpleKnot) -> TightContact:
    """The structure with its matched labels and tau values filled in."""
    space = knot.space
    table = correction_terms(space)
    values = tau_xi(structure, knot)
    matched = tuple(i for i in space.labels() if table[i] == structure.d_xi)
    return replace(
        structure, matched_labels=matched, tau_values=tuple(sorted(values)))


def contact_summary(m: int, k: int) -> dict:
    """JSON-ready summary of all tight structures on L(m, 1), with tau values
    computed against the simple knot of class k."""
    knot = SimpleKnot(LensSpace(m, 1 if m > 1 else 0), k)
    structures = [match_structure(s, knot) for s in enumerate_tight(m)]
    return {
        "m": m,
        "structures": [
            {
                "rot": s.rot,
                "tb": s.tb,
                "h": format_rat(s.hopf),
                "d": format_rat(s.d_xi),
                "tau": [format_rat(t) for t in s.tau_values],
            }
            for s in structures
        ],
    }
