"""Agent systems and the dependence relation over behaviours.

A dependence relation b R a reads "b depends on a": information can
flow from a to b through a shared environment.  The relation must be
bilinear with respect to behaviour choice and must isolate the inactive
and idle behaviours (they depend on nothing and nothing depends on
them).

Bilinearity and isolation interact: whenever the idle behaviour is the
join of other behaviours (and it always absorbs joins in models where
it sits at the top of the natural order), the unrestricted biconditional
forces pairs involving it, which isolation forbids.  The verifier
therefore skips, by default, exactly the biconditional instances whose
composite behaviour is the inactive or idle element; those instances
are governed by the isolation laws instead.  strict_bilinearity=True
restores the literal quantification.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import AxiomReport, Violation
from .errors import DomainError, StructuralError
from .model import C2KAModel

__all__ = [
    "DependenceRelation",
    "AgentSystem",
    "verify_dependence",
    "bilinear_closure",
    "ClosureConflict",
]


@dataclass(frozen=True)
class DependenceRelation:
    """Set of ordered pairs (b, a) with b R a meaning b depends on a."""

    pairs: frozenset[tuple[str, str]] = frozenset()

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list[tuple[str, str]]:
        return sorted(self.pairs)

    def transitive_closure(self) -> "DependenceRelation":
        """Least transitive superset, over the whole carrier."""
        closed = set(self.pairs)
        while True:
            step = {
                (b, a)
                for (b, k) in closed
                for (k2, a) in closed
                if k == k2
            }
            if step <= closed:
                return DependenceRelation(frozenset(closed))
            closed |= step


@dataclass(frozen=True)
class AgentSystem:
    """Named agents bound to behaviours of one model, plus a dependence relation."""

    model: C2KAModel
    agents: tuple[tuple[str, str], ...]
    dep: DependenceRelation = field(default_factory=DependenceRelation)

    def __post_init__(self):
        if not self.agents:
            raise StructuralError("a system needs at least one agent")
        names = [n for n, _ in self.agents]
        if len(set(names)) != len(names):
            raise StructuralError("agent names must be unique")
        for name, beh in self.agents:
            if beh not in self.model.cka.carrier:
                raise StructuralError(f"agent {name!r} bound to unknown behaviour {beh!r}")
        for b, a in self.dep.pairs:
            if b not in self.model.cka.carrier or a not in self.model.cka.carrier:
                raise StructuralError(f"dependence pair ({b!r}, {a!r}) is outside the carrier")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.agents)

    def behaviour(self, name: str) -> str:
        for n, b in self.agents:
            if n == name:
                return b
        raise StructuralError(f"unknown agent {name!r}")

    def rebind(self, name: str, behaviour: str) -> "AgentSystem":
        """Same system with one agent bound to a different behaviour."""
        if behaviour not in self.model.cka.carrier:
            raise StructuralError(f"behaviour {behaviour!r} not in carrier")
        self.behaviour(name)
        agents = tuple((n, behaviour if n == name else b) for n, b in self.agents)
        return AgentSystem(self.model, agents, self.dep)

    def bind_fresh(self, name: str, behaviour: str) -> "AgentSystem":
        """Extend the system with a new agent."""
        if name in self.names:
            raise StructuralError(f"agent {name!r} already exists")
        return AgentSystem(self.model, self.agents + ((name, behaviour),), self.dep)


def verify_dependence(
    sys_or_model: "AgentSystem | C2KAModel",
    dep: DependenceRelation | None = None,
    *,
    strict_bilinearity: bool = False,
    collect_all: bool = False,
) -> AxiomReport:
    """Check bilinearity (both arguments) and 0/1 isolation exhaustively."""
    if isinstance(sys_or_model, AgentSystem):
        model, dep = sys_or_model.model, sys_or_model.dep
    else:
        model = sys_or_model
        if dep is None:
            raise DomainError("verify_dependence needs a dependence relation")
    cka = model.cka
    special = (cka.zero, cka.one)
    rep = AxiomReport()
    R = dep.pairs

    for a in cka.carrier:
        for z in special:
            if (z, a) in R:
                rep.violations.append(Violation("dependence.isolation", (z, a), "related", "isolated"))
            if (a, z) in R:
                rep.violations.append(Violation("dependence.isolation", (a, z), "related", "isolated"))

    for a, b, c in itertools.product(cka.carrier, repeat=3):
        bc = cka.plus(b, c)
        if strict_bilinearity or bc not in special:
            lhs = (bc, a) in R
            rhs = (b, a) in R or (c, a) in R
            if lhs != rhs:
                rep.violations.append(
                    Violation("dependence.bilinear-left", (b, c, a), str(lhs), str(rhs))
                )
        ab = cka.plus(a, b)
        if strict_bilinearity or ab not in special:
            lhs = (c, ab) in R
            rhs = (c, a) in R or (c, b) in R
            if lhs != rhs:
                rep.violations.append(
                    Violation("dependence.bilinear-right", (c, a, b), str(lhs), str(rhs))
                )
    return rep.finish(collect_all)


class ClosureConflict(DomainError):
    """Bilinear closure cannot reconcile the generators with isolation."""

    def __init__(self, violation: Violation):
        self.violation = violation
        super().__init__(f"closure conflict: {violation}")


def bilinear_closure(model: C2KAModel, generators: set[tuple[str, str]]) -> DependenceRelation:
    """Least superset of the generators closed under choice on both sides.

    Closure applies the left-to-right directions of the bilinearity
    biconditionals ((b R a) gives (b+c) R a, and (c R a) gives
    c R (a+b)), skipping any composite pair that would touch the
    inactive or idle behaviour so isolation is preserved.  The result is
    re-verified; if the generators are irreconcilable with bilinearity
    (for example a join-reducible generator none of whose parts is
    related), a ClosureConflict reports the offending instance.
    """
    cka = model.cka
    special = (cka.zero, cka.one)
    for b, a in generators:
        if b not in cka.carrier or a not in cka.carrier:
            raise StructuralError(f"generator ({b!r}, {a!r}) is outside the carrier")
        if b in special or a in special:
            raise DomainError(f"generator ({b!r}, {a!r}) touches the inactive or idle behaviour")

    closed: set[tuple[str, str]] = set(generators)
    frontier = set(generators)
    while frontier:
        fresh: set[tuple[str, str]] = set()
        for b, a in frontier:
            for c in cka.carrier:
                bc = cka.plus(b, c)
                if bc not in special and (bc, a) not in closed:
                    fresh.add((bc, a))
                ac = cka.plus(a, c)
                if ac not in special and (b, ac) not in closed:
                    fresh.add((b, ac))
        closed |= fresh
        frontier = fresh

    dep = DependenceRelation(frozenset(closed))
    rep = verify_dependence(model, dep)
    if not rep.passed:
        raise ClosureConflict(rep.violations[0])
    return dep
