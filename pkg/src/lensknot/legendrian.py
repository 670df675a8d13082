"""Formal calculus of Legendrian representatives.

A representative here is a pair of exact rationals (tb, rot) attached to a
simple knot or a formal connected sum of simple knots.  The module only
manipulates such pairs under the stabilization and connected-sum rules

    stabilize:      tb -> tb - 1,  rot -> rot +/- 1
    connected sum:  tb -> tb1 + tb2 + 1,  rot -> rot1 + rot2

and evaluates the two upper bounds for tb + rot:

    tau bound:        2 * tau - 1     (for a chosen Spin^c class)
    Euler-char bound: -chi(F) / q'    (equivalently 2 * a_max - 1)

It does not certify that a pair is realized by an actual Legendrian
embedding; reports should be read as "consistent with", never "realizable".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InvalidInputError, InvariantViolationError
from .exactq import format_rat, frac_center
from .simpleknot import KnotFloerData, SimpleKnot


@dataclass(frozen=True)
class LegendrianRep:
    """A formal (tb, rot) pair for a knot or connected sum of knots."""

    knots: tuple[SimpleKnot, ...]
    tb: Fraction
    rot: Fraction

    def __post_init__(self):
        if not self.knots:
            raise InvalidInputError("a representative needs at least one knot")
        object.__setattr__(self, "tb", Fraction(self.tb))
        object.__setattr__(self, "rot", Fraction(self.rot))
        order = self.order
        for name, value in (("tb", self.tb), ("rot", self.rot)):
            if order % value.denominator != 0:
                raise InvalidInputError(
                    f"{name} = {value} has denominator not dividing the order {order}")

    @property
    def order(self) -> int:
        out = 1
        for knot in self.knots:
            out = lcm(out, knot.order)
        return out

    @property
    def lhs(self) -> Fraction:
        """The bounded quantity tb + rot."""
        return self.tb + self.rot


def stabilize(rep: LegendrianRep, sign: int, times: int = 1) -> LegendrianRep:
    """Stabilize ``times`` times: tb drops by 1 each, rot moves by ``sign``."""
    if sign not in (1, -1):
        raise InvalidInputError("sign must be +1 or -1")
    if times < 0:
        raise InvalidInputError("times must be >= 0")
    return LegendrianRep(
        knots=rep.knots, tb=rep.tb - times, rot=rep.rot + sign * times)


def connect_sum(rep1: LegendrianRep, rep2: LegendrianRep) -> LegendrianRep:
    """Connected sum: tb adds plus one, rot adds, orders take lcm."""
    return LegendrianRep(
        knots=rep1.knots + rep2.knots,
        tb=rep1.tb + rep2.tb + 1,
        rot=rep1.rot + rep2.rot,
    )


@dataclass(frozen=True)
class BoundReport:
    """Both upper bounds for tb + rot, evaluated exactly."""

    lhs: Fraction
    tau_bound: Fraction
    be_bound: Fraction
    satisfied_tau: bool
    satisfied_be: bool
    slack_tau: Fraction
    slack_be: Fraction

    def to_json_dict(self) -> dict:
        return {
            "lhs": format_rat(self.lhs),
            "tau_bound": format_rat(self.tau_bound),
            "be_bound": format_rat(self.be_bound),
            "satisfied_tau": self.satisfied_tau,
            "satisfied_be": self.satisfied_be,
        }


def bound_report(
    rep: LegendrianRep, data: KnotFloerData, tau_star: Fraction
) -> BoundReport:
    """Evaluate tb + rot against 2*tau - 1 and -chi(F)/q'.

    ``tau_star`` must be one of the data's tau values (for a connected sum,
    the summed table already contains the pairwise sums).  The tau bound
    never exceeds the Euler-characteristic bound; that dominance is asserted.
    """
    tau_star = Fraction(tau_star)
    if tau_star not in data.tau.values():
        raise InvalidInputError(
            f"tau* = {tau_star} is not a tau value of the knot data")
    lhs = rep.lhs
    tau_bound = 2 * tau_star - 1
    be_bound = -data.chi_F / Fraction(data.order)
    if tau_bound > be_bound:
        raise InvariantViolationError(
            f"tau bound {tau_bound} exceeds Euler-characteristic bound {be_bound}")
    return BoundReport(
        lhs=lhs,
        tau_bound=tau_bound,
        be_bound=be_bound,
        satisfied_tau=lhs <= tau_bound,
        satisfied_be=lhs <= be_bound,
        slack_tau=tau_bound - lhs,
        slack_be=be_bound - lhs,
    )


def parity_check(rep: LegendrianRep, data: KnotFloerData) -> bool:
    """Whether tb + rot has the parity a representative must have.

    For an honest representative, (tb + rot - 1) / 2 is congruent mod 1 to
    the centered fractional grading of some Spin^c class; stabilization
    moves tb + rot by 0 or -2, so the check is stabilization-invariant.
    """
    target = (rep.lhs - 1) / 2
    return any(frac_center(target - f) == 0 for f in data.a_frac.values())
