"""Finite algebraic structures as explicit operation tables.

Carriers are ordered tuples of opaque symbols; binary and unary
operations are total lookup tables over the carrier.  All law checking
is exhaustive brute force: carriers are desk-scale (n <= 16), so the
worst sweep (the exchange law, O(n^4)) stays comfortably cheap and the
checking code stays obviously correct.

Reports are deterministic: violations are sorted by law name, then by
carrier position of the instantiating tuple.  By default only the first
violation of each law is kept; pass collect_all=True for every one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import StructuralError

__all__ = [
    "Carrier",
    "BinOpTable",
    "UnaryOpTable",
    "Violation",
    "AxiomReport",
    "CKAStructure",
    "natural_leq",
    "check_monoid",
    "check_idempotent_semiring",
    "check_kleene_algebra",
    "check_cka",
]


@dataclass(frozen=True)
class Carrier:
    """Ordered finite set of element symbols; order fixes iteration."""

    elements: tuple[str, ...]

    def __post_init__(self):
        if not self.elements:
            raise StructuralError("carrier must have at least one element")
        if len(set(self.elements)) != len(self.elements):
            raise StructuralError("carrier elements must be unique")

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x: str) -> int:
        try:
            return self.elements.index(x)
        except ValueError:
            raise StructuralError(f"element {x!r} not in carrier") from None


@dataclass(frozen=True)
class BinOpTable:
    """Total binary operation given as a mapping (x, y) -> z."""

    table: dict[tuple[str, str], str]

    def __call__(self, x: str, y: str) -> str:
        try:
            return self.table[(x, y)]
        except KeyError:
            raise StructuralError(f"binary table has no entry for ({x!r}, {y!r})") from None

    def validate(self, carrier: Carrier) -> None:
        for x, y in itertools.product(carrier, repeat=2):
            z = self.table.get((x, y))
            if z is None:
                raise StructuralError(f"binary table missing entry ({x!r}, {y!r})")
            if z not in carrier:
                raise StructuralError(f"binary table entry ({x!r}, {y!r}) = {z!r} is outside the carrier")
        if len(self.table) != len(carrier) ** 2:
            extra = [k for k in self.table if k[0] not in carrier or k[1] not in carrier]
            raise StructuralError(f"binary table has entries outside the carrier: {extra[:3]}")

    @classmethod
    def from_function(cls, carrier: Carrier, fn) -> "BinOpTable":
        return cls({(x, y): fn(x, y) for x in carrier for y in carrier})


@dataclass(frozen=True)
class UnaryOpTable:
    """Total unary operation given as a mapping x -> y."""

    table: dict[str, str]

    def __call__(self, x: str) -> str:
        try:
            return self.table[x]
        except KeyError:
            raise StructuralError(f"unary table has no entry for {x!r}") from None

    def validate(self, carrier: Carrier) -> None:
        for x in carrier:
            y = self.table.get(x)
            if y is None:
                raise StructuralError(f"unary table missing entry for {x!r}")
            if y not in carrier:
                raise StructuralError(f"unary table entry {x!r} -> {y!r} is outside the carrier")
        if len(self.table) != len(carrier):
            extra = [k for k in self.table if k not in carrier]
            raise StructuralError(f"unary table has entries outside the carrier: {extra[:3]}")

    @classmethod
    def from_function(cls, carrier: Carrier, fn) -> "UnaryOpTable":
        return cls({x: fn(x) for x in carrier})


@dataclass(frozen=True)
class Violation:
    """One falsified law instance, with the witnessing elements."""

    law: str
    elements: tuple[str, ...]
    lhs: str
    rhs: str

    def __str__(self):
        inst = ", ".join(self.elements)
        return f"{self.law} fails at ({inst}): {self.lhs} != {self.rhs}"


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    passed is true iff violations is empty; flags carries optional law
    properties checked separately (commutativity, idempotence); warnings
    note degenerate but legal structures.
    """

    violations: list[Violation] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        self.violations.extend(other.violations)
        self.warnings.extend(other.warnings)
        self.flags.update(other.flags)
        return self

    def finish(self, collect_all: bool) -> "AxiomReport":
        """Sort deterministically; keep first violation per law unless collecting all."""
        self.violations.sort(key=lambda v: (v.law, v.elements))
        if not collect_all:
            kept, seen = [], set()
            for v in self.violations:
                if v.law not in seen:
                    seen.add(v.law)
                    kept.append(v)
            self.violations = kept
        return self

    def law_names(self) -> list[str]:
        return sorted({v.law for v in self.violations})


def natural_leq(plus: BinOpTable, a: str, b: str) -> bool:
    """Natural order of an idempotent semiring: a <= b iff a + b = b."""
    return plus(a, b) == b


class _LawChecker:
    """Accumulates violations of named laws over a carrier."""

    def __init__(self, carrier: Carrier, prefix: str = ""):
        self.carrier = carrier
        self.prefix = prefix
        self.report = AxiomReport()

    def law(self, name: str) -> str:
        return f"{self.prefix}{name}"

    def record(self, law: str, elems: tuple[str, ...], lhs: str, rhs: str):
        self.report.violations.append(Violation(self.law(law), elems, lhs, rhs))

    def equation(self, law: str, elems: tuple[str, ...], lhs: str, rhs: str):
        if lhs != rhs:
            self.record(law, elems, lhs, rhs)


def check_monoid(
    carrier: Carrier,
    op: BinOpTable,
    identity: str,
    *,
    collect_all: bool = False,
    prefix: str = "",
) -> AxiomReport:
    """Check associativity and the two-sided identity.

    The report's flags additionally record whether op is commutative and
    idempotent; those are informational, never violations.
    """
    op.validate(carrier)
    if identity not in carrier:
        raise StructuralError(f"identity {identity!r} not in carrier")
    ck = _LawChecker(carrier, prefix)
    for a, b, c in itertools.product(carrier, repeat=3):
        ck.equation("associativity", (a, b, c), op(op(a, b), c), op(a, op(b, c)))
    for a in carrier:
        ck.equation("identity-left", (a,), op(identity, a), a)
        ck.equation("identity-right", (a,), op(a, identity), a)
    ck.report.flags[ck.law("commutative")] = all(
        op(a, b) == op(b, a) for a in carrier for b in carrier
    )
    ck.report.flags[ck.law("idempotent")] = all(op(a, a) == a for a in carrier)
    return ck.report.finish(collect_all)


def check_idempotent_semiring(
    carrier: Carrier,
    plus: BinOpTable,
    times: BinOpTable,
    zero: str,
    one: str,
    *,
    collect_all: bool = False,
    prefix: str = "",
) -> AxiomReport:
    """Check the idempotent-semiring laws with multiplicatively absorbing zero."""
    rep = AxiomReport()
    plus_rep = check_monoid(carrier, plus, zero, collect_all=True, prefix=f"{prefix}plus.")
    times_rep = check_monoid(carrier, times, one, collect_all=True, prefix=f"{prefix}times.")
    rep.merge(plus_rep).merge(times_rep)

    ck = _LawChecker(carrier, prefix)
    if not plus_rep.flags.get(f"{prefix}plus.commutative", False):
        a, b = next(
            (a, b) for a in carrier for b in carrier if plus(a, b) != plus(b, a)
        )
        ck.record("plus.commutativity", (a, b), plus(a, b), plus(b, a))
    for a in carrier:
        ck.equation("plus.idempotence", (a,), plus(a, a), a)
    for a, b, c in itertools.product(carrier, repeat=3):
        ck.equation(
            "distributivity-left", (a, b, c), times(a, plus(b, c)), plus(times(a, b), times(a, c))
        )
        ck.equation(
            "distributivity-right", (a, b, c), times(plus(a, b), c), plus(times(a, c), times(b, c))
        )
    for a in carrier:
        ck.equation("zero-absorbing-left", (a,), times(zero, a), zero)
        ck.equation("zero-absorbing-right", (a,), times(a, zero), zero)
    rep.merge(ck.report)
    if zero == one:
        rep.warnings.append("degenerate semiring: zero = one (one-element natural order)")
    return rep.finish(collect_all)


def check_kleene_algebra(
    carrier: Carrier,
    plus: BinOpTable,
    times: BinOpTable,
    star: UnaryOpTable,
    zero: str,
    one: str,
    *,
    collect_all: bool = False,
    prefix: str = "",
) -> AxiomReport:
    """Check idempotent-semiring laws plus Kozen's star axioms.

    Star is axiomatized by the unfold laws 1 + a.a* <= a* and
    1 + a*.a <= a* and both induction rules: b + a.x <= x implies
    a*.b <= x, and b + x.a <= x implies b.a* <= x, with <= the natural
    order of the semiring.
    """
    star.validate(carrier)
    rep = check_idempotent_semiring(
        carrier, plus, times, zero, one, collect_all=True, prefix=prefix
    )
    ck = _LawChecker(carrier, prefix)

    def leq(a, b):
        return plus(a, b) == b

    for a in carrier:
        sa = star(a)
        lhs = plus(one, times(a, sa))
        if not leq(lhs, sa):
            ck.record("star-unfold-left", (a,), lhs, sa)
        lhs = plus(one, times(sa, a))
        if not leq(lhs, sa):
            ck.record("star-unfold-right", (a,), lhs, sa)
    for a, b, x in itertools.product(carrier, repeat=3):
        if leq(plus(b, times(a, x)), x) and not leq(times(star(a), b), x):
            ck.record("star-induction-left", (a, b, x), times(star(a), b), x)
        if leq(plus(b, times(x, a)), x) and not leq(times(b, star(a)), x):
            ck.record("star-induction-right", (a, b, x), times(b, star(a)), x)
    return rep.merge(ck.report).finish(collect_all)


@dataclass(frozen=True)
class CKAStructure:
    """A concurrent Kleene algebra as operation tables.

    Two Kleene algebras share the carrier, choice, zero and one: one for
    sequential composition and one for commutative parallel composition,
    linked by the exchange law.
    """

    carrier: Carrier
    plus: BinOpTable
    seq: BinOpTable
    par: BinOpTable
    seq_star: UnaryOpTable
    par_star: UnaryOpTable
    zero: str
    one: str

    def validate(self) -> None:
        """Structural totality/closure only; laws are check_cka's job."""
        for t in (self.plus, self.seq, self.par):
            t.validate(self.carrier)
        for t in (self.seq_star, self.par_star):
            t.validate(self.carrier)
        if self.zero not in self.carrier or self.one not in self.carrier:
            raise StructuralError("zero/one must be carrier elements")

    def leq(self, a: str, b: str) -> bool:
        return natural_leq(self.plus, a, b)


def check_cka(
    cka: CKAStructure,
    *,
    require_par_commutative: bool = True,
    collect_all: bool = False,
) -> AxiomReport:
    """Check both constituent Kleene algebras, exchange, and commutativity of par.

    Commutativity of parallel composition is reported as its own law so
    callers may downgrade it to a warning (require_par_commutative=False).
    """
    cka.validate()
    rep = AxiomReport()
    rep.merge(
        check_kleene_algebra(
            cka.carrier, cka.plus, cka.seq, cka.seq_star, cka.zero, cka.one,
            collect_all=True, prefix="seq.",
        )
    )
    rep.merge(
        check_kleene_algebra(
            cka.carrier, cka.plus, cka.par, cka.par_star, cka.zero, cka.one,
            collect_all=True, prefix="par.",
        )
    )
    ck = _LawChecker(cka.carrier)
    commutative = True
    for a, b in itertools.product(cka.carrier, repeat=2):
        if cka.par(a, b) != cka.par(b, a):
            commutative = False
            if require_par_commutative:
                ck.record("par.commutativity", (a, b), cka.par(a, b), cka.par(b, a))
    rep.flags["par.commutative"] = commutative
    if not commutative and not require_par_commutative:
        rep.warnings.append("parallel composition is not commutative (check downgraded by flag)")
    for a, b, c, d in itertools.product(cka.carrier, repeat=4):
        lhs = cka.seq(cka.par(a, b), cka.par(c, d))
        rhs = cka.par(cka.seq(b, c), cka.seq(a, d))
        if not cka.leq(lhs, rhs):
            ck.record("exchange", (a, b, c, d), lhs, rhs)
    rep.merge(ck.report)
    if len(cka.carrier) == 1:
        rep.warnings.append("degenerate CKA: one-element carrier forces 0 = 1")
    return rep.finish(collect_all)
