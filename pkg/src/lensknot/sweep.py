"""Batch verification sweep over simple knots.

For every lens space L(p, q) with p <= p_max and every knot class k, the
sweep checks the doubled-grading identity (diagram pipeline vs recursion
pipeline, which share no code) together with the grading invariants:
anti-symmetry, mean zero, integrality of 2*q'*A, the zero class giving zero
gradings, the Euler-characteristic ceiling, tau-bound dominance, mirror
negation under k -> p - k, the per-label chart match, and conjugation
symmetry of each correction-term table.

Work is split by (p, q) pair, so each worker computes one correction table
and reuses it for all k.  Verdicts are merged in sorted (p, q, k) order,
which makes reports byte-identical for any worker count.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidInputError
from .lens import LensSpace, conjugate, correction_terms, identity_form, two_tau_from_d
from .simpleknot import SimpleKnot, alexander_gradings, generator_label


def enumerate_spaces(p_max: int) -> list[tuple[int, int]]:
    if p_max < 1:
        raise InvalidInputError(f"p_max must be >= 1, got {p_max}")
    out = []
    for p in range(1, p_max + 1):
        if p == 1:
            out.append((1, 0))
        else:
            out.extend((p, q) for q in range(1, p) if gcd(p, q) == 1)
    return out


def _check_triple(space, k, data, rhs) -> list[str]:
    failed = []
    A = [data.A[j] for j in range(space.p)]
    order = data.order

    if sorted(2 * a for a in A) != sorted(rhs):
        failed.append("two_tau_multiset")
    if any(2 * data.tau[i] != rhs[i] for i in space.labels()):
        failed.append("per_label_chart")
    if sorted(A) != sorted(-a for a in A):
        failed.append("antisymmetry")
    if sum(A) != 0:
        failed.append("mean_zero")
    if data.a_max != max(A) or data.a_max != -min(A):
        failed.append("a_max")
    if any((2 * order * a).denominator != 1 for a in A):
        failed.append("integrality")
    if k == 0 and any(a != 0 for a in A):
        failed.append("zero_class")
    if order != (space.p // gcd(space.p, k) if k else 1):
        failed.append("order")
    chi = data.chi_F
    if chi > 1:
        failed.append("chi_ceiling")
    elif chi == 1 and data.a_max != Fraction(order - 1, 2 * order):
        # chi = 1 exactly for rational unknots (disk Seifert surface)
        failed.append("chi_ceiling")
    if any(t > data.a_max for t in data.tau.values()):
        failed.append("tau_dominance")
    if any(
        not (Fraction(-1, 2) <= f < Fraction(1, 2))
        or (data.tau[i] - f).denominator != 1
        for i, f in data.a_frac.items()
    ):
        failed.append("frac_part")
    return failed


def check_space(args: tuple[int, int, bool]) -> list[dict]:
    """Verdicts for every knot class in one lens space."""
    p, q, shift_before_conjugation = args
    space = LensSpace(p, q)

    table = correction_terms(space)
    space_failures = []
    if any(table[i] != table[conjugate(space, i)] for i in space.labels()):
        space_failures.append("d_conjugation_symmetry")

    gradings = {}
    verdicts = []
    for k in range(p):
        data = alexander_gradings(SimpleKnot(space, k))
        gradings[k] = sorted(data.A.values())
        rhs = two_tau_from_d(
            space, k, shift_before_conjugation=shift_before_conjugation)
        failed = space_failures + _check_triple(space, k, data, rhs)
        verdicts.append({"p": p, "q": q, "k": k, "ok": not failed, "failed": failed})

    for k in range(p):
        if gradings[k] != sorted(-a for a in gradings[(p - k) % p]):
            verdicts[k]["ok"] = False
            verdicts[k]["failed"] = verdicts[k]["failed"] + ["mirror_negation"]

    for v in verdicts:
        if v["ok"]:
            del v["failed"]
    return verdicts


@dataclass(frozen=True)
class SweepReport:
    """Outcome of one sweep; content is deterministic for a given range."""

    p_max: int
    identity_form: str
    verdicts: tuple[dict, ...]  # sorted by (p, q, k)
    wall_time: float            # console information only, never serialized

    @property
    def n_triples(self) -> int:
        return len(self.verdicts)

    @property
    def failures(self) -> tuple[dict, ...]:
        return tuple(v for v in self.verdicts if not v["ok"])

    @property
    def all_ok(self) -> bool:
        return not self.failures

    def report_json(self) -> str:
        payload = {
            "p_max": self.p_max,
            "identity_form": self.identity_form,
            "counts": {
                "triples": self.n_triples,
                "ok": self.n_triples - len(self.failures),
                "failed": len(self.failures),
            },
            "failures": list(self.failures),
            "verdicts": list(self.verdicts),
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def run_sweep(
    p_max: int, jobs: int = 1, *, shift_before_conjugation: bool = False
) -> SweepReport:
    """Run the whole sweep, optionally in parallel over (p, q) pairs."""
    if jobs < 1:
        raise InvalidInputError(f"jobs must be >= 1, got {jobs}")
    started = time.perf_counter()
    tasks = [(p, q, shift_before_conjugation) for p, q in enumerate_spaces(p_max)]
    if jobs == 1:
        chunks = [check_space(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(check_space, tasks, chunksize=4))
    verdicts = [v for chunk in chunks for v in chunk]
    verdicts.sort(key=lambda v: (v["p"], v["q"], v["k"]))
    return SweepReport(
        p_max=p_max,
        identity_form=identity_form(shift_before_conjugation),
        verdicts=tuple(verdicts),
        wall_time=time.perf_counter() - started,
    )
