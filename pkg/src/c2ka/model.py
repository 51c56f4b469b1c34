"""The full C2KA: a CKA and a stimulus structure coupled by two actions.

The next-behaviour action maps a stimulus and a behaviour to the
behaviour the agent adopts; the next-stimulus mapping gives the stimulus
the agent emits in response.  Both are verified as unitary, zero
preserving semimodule actions, then the three coupling axioms are swept
exhaustively.

The cascading-consistency axiom (the Horn clause relating a stimulus
introduced to a sequential composition with the sub-behaviours that may
generate the cascaded stimulus) is checked in a guarded form by default:
instances at the neutral stimulus or with the inactive/idle behaviour in
the sub-behaviour slot are skipped.  Quantified literally over those
instances too, the axiom is satisfiable only by models with at most two
behaviours and an identity action, which admit no communication at all;
the guarded sweep keeps every instance the coupling can actually
discharge.  Pass strict_cascade=True for the literal sweep.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import AxiomReport, CKAStructure, Violation, check_cka
from .errors import StructuralError
from .stimulus import StimulusStructure, check_stimulus_structure

__all__ = [
    "NextBehaviourAction",
    "NextStimulusMapping",
    "C2KAModel",
    "check_left_semimodule",
    "check_right_semimodule",
    "check_c2ka",
    "orbit",
    "strong_orbit",
    "is_fixed_point_behaviour",
    "is_without_reactivation",
]


@dataclass(frozen=True)
class NextBehaviourAction:
    """Total mapping act(s, a): stimulus s transforms behaviour a."""

    table: dict[tuple[str, str], str]

    def __call__(self, s: str, a: str) -> str:
        try:
            return self.table[(s, a)]
        except KeyError:
            raise StructuralError(f"next-behaviour action has no entry for ({s!r}, {a!r})") from None

    def validate(self, stim: StimulusStructure, cka: CKAStructure) -> None:
        for s, a in itertools.product(stim.carrier, cka.carrier):
            v = self.table.get((s, a))
            if v is None:
                raise StructuralError(f"next-behaviour action missing entry ({s!r}, {a!r})")
            if v not in cka.carrier:
                raise StructuralError(f"act({s!r}, {a!r}) = {v!r} is not a behaviour")


@dataclass(frozen=True)
class NextStimulusMapping:
    """Total mapping out(s, a): the stimulus behaviour a emits under s."""

    table: dict[tuple[str, str], str]

    def __call__(self, s: str, a: str) -> str:
        try:
            return self.table[(s, a)]
        except KeyError:
            raise StructuralError(f"next-stimulus mapping has no entry for ({s!r}, {a!r})") from None

    def validate(self, stim: StimulusStructure, cka: CKAStructure) -> None:
        for s, a in itertools.product(stim.carrier, cka.carrier):
            v = self.table.get((s, a))
            if v is None:
                raise StructuralError(f"next-stimulus mapping missing entry ({s!r}, {a!r})")
            if v not in stim.carrier:
                raise StructuralError(f"out({s!r}, {a!r}) = {v!r} is not a stimulus")


@dataclass(frozen=True)
class C2KAModel:
    cka: CKAStructure
    stim: StimulusStructure
    act: NextBehaviourAction
    out: NextStimulusMapping

    def validate(self) -> None:
        self.cka.validate()
        self.stim.validate()
        self.act.validate(self.stim, self.cka)
        self.out.validate(self.stim, self.cka)


def check_left_semimodule(model: C2KAModel, *, collect_all: bool = False) -> AxiomReport:
    """Unitary, zero-preserving left semimodule laws of the action."""
    model.validate()
    cka, stim, act = model.cka, model.stim, model.act
    rep = AxiomReport()

    def eq(law, elems, lhs, rhs):
        if lhs != rhs:
            rep.violations.append(Violation(law, elems, lhs, rhs))

    for s in stim.carrier:
        for a, b in itertools.product(cka.carrier, repeat=2):
            eq("act.behaviour-choice", (s, a, b),
               act(s, cka.plus(a, b)), cka.plus(act(s, a), act(s, b)))
    for s, t in itertools.product(stim.carrier, repeat=2):
        for a in cka.carrier:
            eq("act.stimulus-choice", (s, t, a),
               act(stim.oplus(s, t), a), cka.plus(act(s, a), act(t, a)))
            eq("act.stimulus-sequence", (s, t, a),
               act(stim.odot(s, t), a), act(s, act(t, a)))
    for a in cka.carrier:
        eq("act.unitary", (a,), act(stim.neutral, a), a)
        eq("act.zero-preserving", (a,), act(stim.deactivation, a), cka.zero)
    return rep.finish(collect_all)


def check_right_semimodule(model: C2KAModel, *, collect_all: bool = False) -> AxiomReport:
    """Unitary, zero-preserving right semimodule laws of the output.

    Only choice-bilinearity in both arguments plus the unitary and
    zero-preserving identities are semimodule laws here; compatibility
    with sequential composition is exactly the next-stimulus coupling
    axiom and is checked by check_c2ka.
    """
    model.validate()
    cka, stim, out = model.cka, model.stim, model.out
    rep = AxiomReport()

    def eq(law, elems, lhs, rhs):
        if lhs != rhs:
            rep.violations.append(Violation(law, elems, lhs, rhs))

    for s in stim.carrier:
        for a, b in itertools.product(cka.carrier, repeat=2):
            eq("out.behaviour-choice", (s, a, b),
               out(s, cka.plus(a, b)), stim.oplus(out(s, a), out(s, b)))
    for s, t in itertools.product(stim.carrier, repeat=2):
        for a in cka.carrier:
            eq("out.stimulus-choice", (s, t, a),
               out(stim.oplus(s, t), a), stim.oplus(out(s, a), out(t, a)))
    for s in stim.carrier:
        eq("out.unitary", (s,), out(s, cka.one), s)
        eq("out.zero-preserving", (s,), out(s, cka.zero), stim.deactivation)
    return rep.finish(collect_all)


def check_c2ka(
    model: C2KAModel,
    *,
    strict_cascade: bool = False,
    require_par_commutative: bool = True,
    collect_all: bool = False,
) -> AxiomReport:
    """Full verification: components, both semimodules, coupling axioms.

    The three coupling axioms, for all behaviours a, b, c and stimuli
    s, t:

      (i)   act(s, a;b) = act(s,a) ; act(out(s,a), b)
      (ii)  c <= a  or  act(s,a) ; act(out(s,c), b) = 0
      (iii) out(s.t, a) = out(s, act(t,a)) . out(t, a)

    Axiom (ii) is guarded by default (see module docstring); the
    strict_cascade flag restores the literal quantification.
    """
    model.validate()
    cka, stim, act, out = model.cka, model.stim, model.act, model.out
    rep = AxiomReport()
    rep.merge(check_cka(cka, require_par_commutative=require_par_commutative, collect_all=True))
    rep.merge(check_stimulus_structure(stim, collect_all=True))
    rep.merge(check_left_semimodule(model, collect_all=True))
    rep.merge(check_right_semimodule(model, collect_all=True))

    def eq(law, elems, lhs, rhs):
        if lhs != rhs:
            rep.violations.append(Violation(law, elems, lhs, rhs))

    for s in stim.carrier:
        for a, b in itertools.product(cka.carrier, repeat=2):
            eq("cascade.next-behaviour", (s, a, b),
               act(s, cka.seq(a, b)), cka.seq(act(s, a), act(out(s, a), b)))
    for s, t in itertools.product(stim.carrier, repeat=2):
        for a in cka.carrier:
            eq("cascade.next-stimulus", (s, t, a),
               out(stim.odot(s, t), a), stim.odot(out(s, act(t, a)), out(t, a)))

    law = "cascade.consistency" if strict_cascade else "cascade.consistency-guarded"
    special = (cka.zero, cka.one)
    for s in stim.carrier:
        if not strict_cascade and s == stim.neutral:
            continue
        for c in cka.carrier:
            if not strict_cascade and c in special:
                continue
            for a in cka.carrier:
                if cka.leq(c, a):
                    continue
                oc = out(s, c)
                for b in cka.carrier:
                    got = cka.seq(act(s, a), act(oc, b))
                    if got != cka.zero:
                        rep.violations.append(Violation(law, (s, a, b, c), got, cka.zero))
    return rep.finish(collect_all)


def orbit(model: C2KAModel, a: str) -> set[str]:
    """All behavioural responses of a to any stimulus."""
    if a not in model.cka.carrier:
        raise StructuralError(f"behaviour {a!r} not in carrier")
    return {model.act(s, a) for s in model.stim.carrier}


def strong_orbit(model: C2KAModel, a: str) -> set[str]:
    """Behaviours whose orbits coincide with a's orbit."""
    orb = orbit(model, a)
    return {b for b in model.cka.carrier if orbit(model, b) == orb}


def is_fixed_point_behaviour(model: C2KAModel, a: str) -> bool:
    """True iff no stimulus except deactivation changes a."""
    if a not in model.cka.carrier:
        raise StructuralError(f"behaviour {a!r} not in carrier")
    return all(
        model.act(s, a) == a
        for s in model.stim.carrier
        if s != model.stim.deactivation
    )


def is_without_reactivation(model: C2KAModel) -> bool:
    """True iff no stimulus except deactivation moves the idle behaviour."""
    return is_fixed_point_behaviour(model, model.cka.one)
