"""Walk models: ballot triples, tandem triples, and planar step sets.

A ballot triple (a, b, c) with gcd(a, b, c) = 1 describes lattice paths in
Z^3 taking unit steps x+1, y+1, z+1, starting at the origin and confined to
the cone A*x >= B*y >= C*z >= 0, where M = lcm(a, b, c) and A = M/a,
B = M/b, C = M/c.  Complete rounds end on the diagonal ray (a*n, b*n, c*n).

The tandem triple (A, B, C), again with gcd(A, B, C) = 1, describes the
equivalent quarter-plane model with the three steps

    R = (A, 0),    D = (-B, B),    U = (0, -C).

The two parameterizations determine each other through a*A = b*B = c*C = M,
and an excursion of the planar model has length p = a + b + c per round.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import ValidationError

Step = tuple[int, int]


def _check_triple(kind: str, triple: tuple[int, int, int]) -> None:
    for value in triple:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValidationError(f"{kind} triple must consist of integers, got {triple!r}")
        if value < 1:
            raise ValidationError(f"{kind} triple must be positive, got {triple!r}")
    if gcd(*triple) != 1:
        raise ValidationError(f"{kind} triple must have gcd 1, got {triple!r}")


@dataclass(frozen=True)
class BallotModel:
    """A coprime positive triple (a, b, c) of candidate vote shares."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        _check_triple("ballot", (self.a, self.b, self.c))

    @property
    def M(self) -> int:
        return lcm(self.a, self.b, self.c)

    @property
    def period(self) -> int:
        """Steps per round: p = a + b + c."""
        return self.a + self.b + self.c


@dataclass(frozen=True)
class TandemModel:
    """A coprime positive triple (A, B, C) of quarter-plane step sizes."""

    A: int
    B: int
    C: int

    def __post_init__(self) -> None:
        _check_triple("tandem", (self.A, self.B, self.C))

    @property
    def M(self) -> int:
        return lcm(self.A, self.B, self.C)

    @property
    def period(self) -> int:
        """Excursion lengths are multiples of p = M/A + M/B + M/C."""
        m = self.M
        return m // self.A + m // self.B + m // self.C

    def swapped(self) -> "TandemModel":
        """The reversal partner (C, B, A)."""
        return TandemModel(self.C, self.B, self.A)


def ballot_to_tandem(m: BallotModel) -> TandemModel:
    big = m.M
    return TandemModel(big // m.a, big // m.b, big // m.c)


def tandem_to_ballot(m: TandemModel) -> BallotModel:
    big = m.M
    return BallotModel(big // m.A, big // m.B, big // m.C)


@dataclass(frozen=True)
class StepSet:
    """A finite set of distinct planar integer steps."""

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        steps = tuple(tuple(s) for s in self.steps)
        if not steps:
            raise ValidationError("step set must be nonempty")
        for s in steps:
            if len(s) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in s):
                raise ValidationError(f"steps must be integer pairs, got {s!r}")
        if len(set(steps)) != len(steps):
            raise ValidationError(f"steps must be distinct, got {steps!r}")
        object.__setattr__(self, "steps", steps)

    def has_nonnegative_step(self) -> bool:
        """True when some step points into the closed first quadrant."""
        return any(i >= 0 and j >= 0 for i, j in self.steps)

    def not_in_half_plane(self) -> bool:
        """True when no closed half-plane through the origin contains every step.

        Exact integer test: if a direction u with u . s >= 0 for all steps s
        exists, the cone of such u is closed and its boundary is attained at a
        direction perpendicular to one of the steps, so checking the 2*|S|
        candidate perpendiculars (plus each step's own direction, which covers
        the case |S| = 1 or all steps parallel) decides containment.  A zero
        step lies in every half-plane, so only nonzero steps anchor candidates.
        """
        nonzero = [s for s in self.steps if s != (0, 0)]
        if not nonzero:
            return False
        candidates = []
        for i, j in nonzero:
            candidates.extend([(-j, i), (j, -i), (i, j)])
        for u in candidates:
            if all(u[0] * i + u[1] * j >= 0 for i, j in self.steps):
                return False
        return True


def tandem_step_set(m: TandemModel) -> StepSet:
    return StepSet(((m.A, 0), (-m.B, m.B), (0, -m.C)))


def period(m: TandemModel) -> int:
    return m.period


def parse_model(text: str) -> TandemModel:
    """Parse ``"A,B,C"`` or ``"ballot:a,b,c"`` into a tandem model."""
    text = text.strip()
    ballot = False
    if text.startswith("ballot:"):
        ballot = True
        text = text[len("ballot:"):]
    parts = text.split(",")
    if len(parts) != 3:
        raise ValidationError(f"model must be three comma-separated integers, got {text!r}")
    try:
        triple = tuple(int(p.strip()) for p in parts)
    except ValueError:
        raise ValidationError(f"model must be three comma-separated integers, got {text!r}") from None
    if ballot:
        return ballot_to_tandem(BallotModel(*triple))
    return TandemModel(*triple)
