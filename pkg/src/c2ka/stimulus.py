"""Stimulus structures: idempotent semirings of external stimuli.

The deactivation stimulus is the additive identity and multiplicatively
absorbing; the neutral stimulus is the multiplicative identity.  On top
of the semiring we compute divisibility, the basic (indivisible)
stimuli, and the sub-stimulus order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import AxiomReport, BinOpTable, Carrier, check_idempotent_semiring, natural_leq
from .errors import StructuralError

__all__ = [
    "StimulusStructure",
    "check_stimulus_structure",
    "divides",
    "basic_stimuli",
    "sub_stimulus",
]


@dataclass(frozen=True)
class StimulusStructure:
    """Finite stimulus semiring with deactivation d and neutral n."""

    carrier: Carrier
    oplus: BinOpTable
    odot: BinOpTable
    deactivation: str
    neutral: str

    def validate(self) -> None:
        self.oplus.validate(self.carrier)
        self.odot.validate(self.carrier)
        if self.deactivation not in self.carrier:
            raise StructuralError(f"deactivation {self.deactivation!r} not in carrier")
        if self.neutral not in self.carrier:
            raise StructuralError(f"neutral {self.neutral!r} not in carrier")

    def require(self, *elems: str) -> None:
        for s in elems:
            if s not in self.carrier:
                raise StructuralError(f"stimulus {s!r} not in carrier")

    def leq(self, s: str, t: str) -> bool:
        return natural_leq(self.oplus, s, t)


def check_stimulus_structure(stim: StimulusStructure, *, collect_all: bool = False) -> AxiomReport:
    """Idempotent-semiring check with zero=deactivation, one=neutral."""
    stim.validate()
    rep = check_idempotent_semiring(
        stim.carrier, stim.oplus, stim.odot, stim.deactivation, stim.neutral,
        collect_all=collect_all,
    )
    if stim.deactivation == stim.neutral and len(stim.carrier) > 1:
        rep.warnings.append("degenerate stimulus structure: deactivation = neutral")
    return rep


def divides(stim: StimulusStructure, x: str, y: str) -> bool:
    """x | y iff some z makes y = x (.) z; decided by exhaustive search."""
    stim.require(x, y)
    return any(stim.odot(x, z) == y for z in stim.carrier)


def basic_stimuli(stim: StimulusStructure) -> set[str]:
    """Stimuli indivisible with regard to sequential composition.

    s is basic iff every divisor of s is the neutral stimulus or s
    itself, and s dividing a composition t (.) r implies s divides t or
    s divides r.  The deactivation stimulus is excluded unconditionally:
    in degenerate structures the literal conditions hold for it, but it
    can never carry communication.
    """
    stim.validate()
    carrier = stim.carrier
    div = {(x, y): divides(stim, x, y) for x in carrier for y in carrier}
    basics: set[str] = set()
    for s in carrier:
        if s == stim.deactivation:
            continue
        if any(div[(t, s)] and t not in (stim.neutral, s) for t in carrier):
            continue
        ok = all(
            not div[(s, stim.odot(t, r))] or div[(s, t)] or div[(s, r)]
            for t, r in itertools.product(carrier, repeat=2)
        )
        if ok:
            basics.add(s)
    return basics


def sub_stimulus(stim: StimulusStructure, s: str, t: str) -> bool:
    """s is a sub-stimulus of t iff s (+) t = t (the natural order)."""
    stim.require(s, t)
    return stim.oplus(s, t) == t
