"""Potential-for-communication relations over agent systems.

Communication via external stimuli: agent A directly reaches B when
some basic stimulus generated by A's behaviour is a sub-stimulus of an
emission and influences (does not fix) B's behaviour.  Communication
via shared environments: B's behaviour depends on A's under the given
dependence relation (transitively, over the whole carrier, for the
indirect form).  The combined relation takes a step when either kind
does, and its reachability closure is the potential for communication.

Reachability relations are computed as breadth-first search over the
direct-edge digraph; the recursive definitions from the glossary are
kept in the test oracles, and equivalence is asserted there.  Witnesses
are deterministic: stimulus pairs are minimal in carrier order, paths
are shortest with lexicographic tie-breaking on agent order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, StructuralError
from .stimulus import basic_stimuli, sub_stimulus
from .system import AgentSystem

__all__ = [
    "CommVerdict",
    "PathWitness",
    "STIMULI",
    "ENVIRONMENT",
    "direct_stimuli_comm",
    "stimuli_comm_n",
    "stimuli_comm",
    "is_stimuli_connected",
    "communication_fixed_points",
    "universally_influential",
    "direct_env_comm",
    "env_comm",
    "pfc_direct",
    "pfc",
]

STIMULI = "stimuli"
ENVIRONMENT = "environment"


@dataclass(frozen=True)
class PathWitness:
    """Agent-name path whose consecutive hops are direct communications.

    kinds[i] lists the direct-communication kinds that hold for the hop
    from hops[i] to hops[i+1].
    """

    hops: tuple[str, ...]
    kinds: tuple[tuple[str, ...], ...]

    def __str__(self):
        if len(self.hops) == 1:
            return self.hops[0]
        parts = [self.hops[0]]
        for hop, kind in zip(self.hops[1:], self.kinds):
            parts.append(f"-[{'+'.join(kind)}]-> {hop}")
        return " ".join(parts)


@dataclass(frozen=True)
class CommVerdict:
    """Outcome of one relation query, with re-verifiable evidence.

    witness is a (stimulus, sub-stimulus) pair for direct stimuli
    communication, a dependence pair or chain for environment
    communication, a PathWitness for reachability relations, and a
    disconnecting partition (pair of agent-name tuples) for a failed
    connectivity check.
    """

    holds: bool
    witness: object = None

    def __bool__(self):
        return self.holds


def _check_pair(sys: AgentSystem, a_name: str, b_name: str, *, allow_self: bool = False):
    behaviours = dict(sys.agents)
    for name in (a_name, b_name):
        if name not in behaviours:
            raise StructuralError(f"unknown agent {name!r}")
    if a_name == b_name and not allow_self:
        raise DomainError("source and sink agents must differ")
    return behaviours[a_name], behaviours[b_name]


def _basics_ordered(sys: AgentSystem) -> list[str]:
    basics = basic_stimuli(sys.model.stim)
    return [s for s in sys.model.stim.carrier if s in basics]


def direct_stimuli_comm(sys: AgentSystem, a_name: str, b_name: str) -> CommVerdict:
    """A directly communicates with B via external stimuli.

    Holds iff some basic stimulus t, sub-stimulus of an output that A's
    behaviour generates under some basic stimulus s, influences B's
    behaviour.  Witness: first such (s, t) in carrier order.
    """
    a, b = _check_pair(sys, a_name, b_name)
    model = sys.model
    for s in _basics_ordered(sys):
        emitted = model.out(s, a)
        for t in _basics_ordered(sys):
            if sub_stimulus(model.stim, t, emitted) and model.act(t, b) != b:
                return CommVerdict(True, witness=(s, t))
    return CommVerdict(False)


def stimuli_comm_n(sys: AgentSystem, a_name: str, b_name: str, n: int) -> bool:
    """A reaches B via external stimuli using at most n basic stimuli.

    The base case n = 1 is direct communication; each further step
    threads through an intermediate agent distinct from both endpoints.
    Memoized but semantically the naive recursion.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    _check_pair(sys, a_name, b_name)

    @lru_cache(maxsize=None)
    def direct(x: str, y: str) -> bool:
        return direct_stimuli_comm(sys, x, y).holds

    @lru_cache(maxsize=None)
    def rec(x: str, y: str, k: int) -> bool:
        if k == 1:
            return direct(x, y)
        return any(
            rec(x, c, k - 1) and direct(c, y)
            for c in sys.names
            if c not in (x, y)
        )

    return rec(a_name, b_name, n)


def _direct_edges(sys: AgentSystem, direct_fn) -> dict[str, list[str]]:
    edges: dict[str, list[str]] = {n: [] for n in sys.names}
    for x in sys.names:
        for y in sys.names:
            if x != y and direct_fn(sys, x, y).holds:
                edges[x].append(y)
    return edges


def _shortest_path(sys: AgentSystem, edges: dict[str, list[str]], src: str, dst: str):
    """BFS shortest path src -> dst with at least one hop; agent order
    breaks ties.  None if unreachable."""
    frontier = [(src,)]
    seen = {src} if src != dst else set()
    while frontier:
        fresh = []
        for path in frontier:
            for nxt in edges[path[-1]]:
                if nxt == dst:
                    return path + (nxt,)
                if nxt not in seen:
                    seen.add(nxt)
                    fresh.append(path + (nxt,))
        frontier = fresh
    return None


def stimuli_comm(sys: AgentSystem, a_name: str, b_name: str) -> CommVerdict:
    """A reaches B through a sequence of direct stimuli communications.

    Computed as digraph reachability over the direct relation, which
    agrees with the bounded recursion for some n >= 1; the witness is a
    shortest path.
    """
    _check_pair(sys, a_name, b_name)
    edges = _direct_edges(sys, direct_stimuli_comm)
    path = _shortest_path(sys, edges, a_name, b_name)
    if path is None:
        return CommVerdict(False)
    kinds = tuple((STIMULI,) for _ in path[:-1])
    return CommVerdict(True, witness=PathWitness(path, kinds))


def is_stimuli_connected(sys: AgentSystem) -> CommVerdict:
    """No nonempty bipartition separates all stimuli communication.

    Equivalent to weak connectivity of the stimuli-communication
    digraph; a failed check carries one disconnecting partition (a weak
    component and its complement).
    """
    names = sys.names
    if len(names) == 1:
        return CommVerdict(True)
    edges = _direct_edges(sys, direct_stimuli_comm)
    undirected: dict[str, set[str]] = {n: set() for n in names}
    for x, ys in edges.items():
        for y in ys:
            undirected[x].add(y)
            undirected[y].add(x)
    component = {names[0]}
    frontier = [names[0]]
    while frontier:
        node = frontier.pop()
        for nxt in undirected[node]:
            if nxt not in component:
                component.add(nxt)
                frontier.append(nxt)
    if len(component) == len(names):
        return CommVerdict(True)
    part = tuple(n for n in names if n in component)
    rest = tuple(n for n in names if n not in component)
    return CommVerdict(False, witness=(part, rest))


def communication_fixed_points(sys: AgentSystem) -> set[str]:
    """Agents with the potential for stimuli communication to no other agent."""
    return {
        a
        for a in sys.names
        if all(not stimuli_comm(sys, a, b).holds for b in sys.names if b != a)
    }


def universally_influential(sys: AgentSystem) -> set[str]:
    """Agents with the potential for stimuli communication to every other agent."""
    return {
        a
        for a in sys.names
        if all(stimuli_comm(sys, a, b).holds for b in sys.names if b != a)
    }


def direct_env_comm(sys: AgentSystem, a_name: str, b_name: str) -> CommVerdict:
    """A directly communicates with B via shared environments: b R a."""
    a, b = _check_pair(sys, a_name, b_name)
    if (b, a) in sys.dep:
        return CommVerdict(True, witness=(b, a))
    return CommVerdict(False)


def env_comm(sys: AgentSystem, a_name: str, b_name: str) -> CommVerdict:
    """A communicates with B via shared environments: b R+ a.

    The transitive closure runs over the whole behaviour carrier, so the
    dependence chain may pass through behaviours not bound to any agent.
    The witness is one such chain from b down to a.
    """
    a, b = _check_pair(sys, a_name, b_name)
    if (b, a) in sys.dep.transitive_closure():
        return CommVerdict(True, witness=_dependence_chain(sys, b, a))
    return CommVerdict(False)


def _dependence_chain(sys: AgentSystem, b: str, a: str) -> tuple[str, ...]:
    """Shortest chain b R k1 R ... R a witnessing b R+ a."""
    succ: dict[str, list[str]] = {}
    for x, y in sys.dep.sorted_pairs():
        succ.setdefault(x, []).append(y)
    frontier = [(b,)]
    seen = {b} if b != a else set()
    while frontier:
        fresh = []
        for path in frontier:
            for nxt in succ.get(path[-1], ()):
                if nxt == a:
                    return path + (nxt,)
                if nxt not in seen:
                    seen.add(nxt)
                    fresh.append(path + (nxt,))
        frontier = fresh
    return (b, a)


def pfc_direct(sys: AgentSystem, a_name: str, b_name: str) -> CommVerdict:
    """Direct potential for communication: either kind of direct step.

    The witness records which disjuncts hold and their sub-witnesses.
    """
    stim_v = direct_stimuli_comm(sys, a_name, b_name)
    env_v = direct_env_comm(sys, a_name, b_name)
    kinds = tuple(
        k for k, v in ((STIMULI, stim_v), (ENVIRONMENT, env_v)) if v.holds
    )
    if not kinds:
        return CommVerdict(False)
    return CommVerdict(
        True,
        witness={
            "kinds": kinds,
            STIMULI: stim_v.witness,
            ENVIRONMENT: env_v.witness,
        },
    )


def pfc(sys: AgentSystem, a_name: str, b_name: str, *, allow_self: bool = False) -> CommVerdict:
    """Potential for communication: reachability over direct steps.

    Least relation closed under pfc(A,B) iff pfcD(A,B) or some agent C
    has pfcD(A,C) and pfc(C,B); computed as reachability over the
    combined direct digraph.  Self-communication pfc(A,A) is undefined
    in the source material and rejected unless allow_self is set, in
    which case it asks for a cycle through the system.
    """
    _check_pair(sys, a_name, b_name, allow_self=allow_self)
    edges = _direct_edges(sys, pfc_direct)
    path = _shortest_path(sys, edges, a_name, b_name)
    if path is None:
        return CommVerdict(False)
    kinds = []
    for x, y in zip(path, path[1:]):
        v = pfc_direct(sys, x, y)
        kinds.append(tuple(v.witness["kinds"]))
    return CommVerdict(True, witness=PathWitness(path, tuple(kinds)))
