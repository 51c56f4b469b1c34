"""What-if engine: replace an agent on a communication path, re-analyse.

Each replacement kind carries the condition the theory attaches to it:
sequential extension and fixed-point replacement preserve the potential
for communication only if their condition holds; choice extension only
if no basic stimulus collapses the composed behaviour into a
sub-behaviour of itself; sequential iteration and strong-orbit
replacement claim unconditional preservation; replacing with the
inactive or idle agent in a without-reactivation model claims loss of
communication.

The conditions are necessary-side claims, not sufficient ones, so the
engine always recomputes the potential for communication on the
modified system and reports both, with a consistency flag that records
whether the claimed implication direction held.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import CommVerdict, pfc, pfc_direct
from .errors import DomainError, StructuralError
from .model import is_fixed_point_behaviour, is_without_reactivation, strong_orbit
from .stimulus import basic_stimuli
from .system import AgentSystem

__all__ = [
    "Seq",
    "Choice",
    "SeqStar",
    "Inactive",
    "Idle",
    "StrongOrbitMember",
    "FixedPoint",
    "ModificationReport",
    "whatif_replace",
]


@dataclass(frozen=True)
class Seq:
    """Replace c by c;d."""

    d: str


@dataclass(frozen=True)
class Choice:
    """Replace c by c+d."""

    d: str


@dataclass(frozen=True)
class SeqStar:
    """Replace c by its finite sequential iteration."""


@dataclass(frozen=True)
class Inactive:
    """Replace c by the inactive behaviour 0."""


@dataclass(frozen=True)
class Idle:
    """Replace c by the idle behaviour 1."""


@dataclass(frozen=True)
class StrongOrbitMember:
    """Replace c by a behaviour in the same strong orbit."""

    c_new: str


@dataclass(frozen=True)
class FixedPoint:
    """Replace c by a fixed point behaviour."""

    c_new: str


_CLAUSES = {
    Seq: "seq",
    Choice: "choice",
    SeqStar: "seq-star",
    Inactive: "inactive",
    Idle: "idle",
    StrongOrbitMember: "strong-orbit",
    FixedPoint: "fixed-point",
}

# Claim attached to each clause: communication is preserved only if the
# condition holds ("only-if"), preserved unconditionally ("preserved"),
# or lost ("not-preserved").
_CLAIMS = {
    "seq": "only-if",
    "choice": "only-if",
    "seq-star": "preserved",
    "inactive": "not-preserved",
    "idle": "not-preserved",
    "strong-orbit": "preserved",
    "fixed-point": "only-if",
}


@dataclass(frozen=True)
class ModificationReport:
    clause: str
    agent: str
    old_behaviour: str
    new_behaviour: str
    claim: str
    condition_holds: bool | None
    recomputed: CommVerdict
    consistent: bool | None
    paper_precondition_met: bool = True

    @property
    def preserved(self) -> bool:
        return self.recomputed.holds


def _replacement_behaviour(sys: AgentSystem, c: str, replacement) -> str:
    cka = sys.model.cka
    if isinstance(replacement, Seq):
        _require_behaviour(sys, replacement.d)
        return cka.seq(c, replacement.d)
    if isinstance(replacement, Choice):
        _require_behaviour(sys, replacement.d)
        return cka.plus(c, replacement.d)
    if isinstance(replacement, SeqStar):
        return cka.seq_star(c)
    if isinstance(replacement, Inactive):
        return cka.zero
    if isinstance(replacement, Idle):
        return cka.one
    if isinstance(replacement, StrongOrbitMember):
        _require_behaviour(sys, replacement.c_new)
        if replacement.c_new not in strong_orbit(sys.model, c):
            raise DomainError(
                f"{replacement.c_new!r} is not in the strong orbit of {c!r}"
            )
        return replacement.c_new
    if isinstance(replacement, FixedPoint):
        _require_behaviour(sys, replacement.c_new)
        if not is_fixed_point_behaviour(sys.model, replacement.c_new):
            raise DomainError(f"{replacement.c_new!r} is not a fixed point behaviour")
        return replacement.c_new
    raise DomainError(f"unknown replacement kind {replacement!r}")


def _require_behaviour(sys: AgentSystem, b: str) -> None:
    if b not in sys.model.cka.carrier:
        raise StructuralError(f"behaviour {b!r} not in carrier")


def _condition(sys: AgentSystem, clause: str, a: str, b: str, c: str, new: str) -> bool | None:
    """Evaluate the clause-specific condition on the original system.

    a and b are the source and sink behaviours, c the replaced agent's
    behaviour, new the replacement behaviour.
    """
    model = sys.model
    cka, stim = model.cka, model.stim
    R = sys.dep
    if clause == "seq":
        # new = c;d: dependence preserved around the composition, or the
        # composed behaviour can still influence the sink under some
        # stimulus (all stimuli, not only basic ones).
        if (new, a) in R and (b, new) in R:
            return True
        return any(model.act(model.out(t, new), b) != b for t in stim.carrier)
    if clause == "choice":
        # No basic stimulus influences the added behaviour into a
        # sub-behaviour of the composition: that would allow a fixed
        # point of the composed agent.
        return all(
            not cka.leq(model.act(t, sys._choice_d), new)  # type: ignore[attr-defined]
            for t in basic_stimuli(stim)
        )
    if clause == "fixed-point":
        return (new, a) in R and (b, new) in R
    return None


def whatif_replace(
    sys: AgentSystem,
    source: str,
    agent: str,
    sink: str,
    replacement,
) -> ModificationReport:
    """Replace agent's behaviour per the replacement kind and re-analyse.

    Requires the hypothesis that the source communicates with the sink
    through the named agent: pfcD(source, agent) and pfc(agent, sink).
    """
    if len({source, agent, sink}) < 3:
        raise DomainError("source, replaced agent and sink must be three distinct agents")
    a = sys.behaviour(source)
    b = sys.behaviour(sink)
    c = sys.behaviour(agent)
    if not (pfc_direct(sys, source, agent).holds and pfc(sys, agent, sink).holds):
        raise DomainError(
            "hypothesis not established: need pfcD(source, agent) and pfc(agent, sink)"
        )

    clause = _CLAUSES[type(replacement)]
    claim = _CLAIMS[clause]

    if clause in ("inactive", "idle") and not is_without_reactivation(sys.model):
        return ModificationReport(
            clause=clause,
            agent=agent,
            old_behaviour=c,
            new_behaviour=sys.model.cka.zero if clause == "inactive" else sys.model.cka.one,
            claim=claim,
            condition_holds=None,
            recomputed=CommVerdict(False),
            consistent=None,
            paper_precondition_met=False,
        )

    new = _replacement_behaviour(sys, c, replacement)

    if clause == "choice":
        model, cka = sys.model, sys.model.cka
        condition = all(
            not cka.leq(model.act(t, replacement.d), new)
            for t in sorted(basic_stimuli(model.stim))
        )
    elif clause in ("seq", "fixed-point"):
        condition = _condition(sys, clause, a, b, c, new)
    else:
        condition = None

    modified = sys.rebind(agent, new)
    recomputed = pfc(modified, source, sink)

    if claim == "only-if":
        consistent = condition or not recomputed.holds
    elif claim == "preserved":
        consistent = recomputed.holds
    else:  # not-preserved
        consistent = not recomputed.holds

    return ModificationReport(
        clause=clause,
        agent=agent,
        old_behaviour=c,
        new_behaviour=new,
        claim=claim,
        condition_holds=condition,
        recomputed=recomputed,
        consistent=consistent,
    )
