"""The bijection between cone walks in Z^3 and tandem quarter-plane walks.

phi(x, y, z) = (A*x - B*y, B*y - C*z) sends the cone A*x >= B*y >= C*z >= 0
onto the closed quadrant, and sends the unit steps x+1, y+1, z+1 to the
tandem steps (A, 0), (-B, B), (0, -C).  Walks map letterwise:

    X -> R,    Y -> D,    Z -> U.

Reading a tandem excursion backwards and exchanging R with U gives an
excursion of the reversed model (C, B, A); doing it twice is the identity.

Brute-force depth-first generators live here as test oracles.  They are
exponential and guarded by a node budget; nothing in the library proper
depends on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, ValidationError
from .models import BallotModel, TandemModel, ballot_to_tandem, tandem_to_ballot

_LETTERS3 = "XYZ"
_LETTERS2 = "RDU"
_3TO2 = str.maketrans(_LETTERS3, _LETTERS2)
_2TO3 = str.maketrans(_LETTERS2, _LETTERS3)
_REVERSE_SWAP = str.maketrans("RU", "UR")

DEFAULT_NODE_BUDGET = 10_000_000


def _unit_steps(letter: str) -> tuple[int, int, int]:
    return {"X": (1, 0, 0), "Y": (0, 1, 0), "Z": (0, 0, 1)}[letter]


def _tandem_displacement(m: TandemModel, letter: str) -> tuple[int, int]:
    return {"R": (m.A, 0), "D": (-m.B, m.B), "U": (0, -m.C)}[letter]


@dataclass(frozen=True)
class Walk3:
    """A cone walk: a word over X, Y, Z whose every prefix stays in the cone."""

    model: BallotModel
    steps: str

    def __post_init__(self) -> None:
        T = ballot_to_tandem(self.model)
        x = y = z = 0
        for k, letter in enumerate(self.steps):
            if letter not in _LETTERS3:
                raise ValidationError(f"step {k} is {letter!r}, expected one of X, Y, Z")
            dx, dy, dz = _unit_steps(letter)
            x, y, z = x + dx, y + dy, z + dz
            if not (T.A * x >= T.B * y >= T.C * z >= 0):
                raise ValidationError(
                    f"prefix of length {k + 1} leaves the cone at ({x}, {y}, {z})"
                )

    def endpoint(self) -> tuple[int, int, int]:
        return (self.steps.count("X"), self.steps.count("Y"), self.steps.count("Z"))


@dataclass(frozen=True)
class Walk2:
    """A quadrant walk: a word over R, D, U whose every prefix stays in x, y >= 0."""

    model: TandemModel
    steps: str

    def __post_init__(self) -> None:
        x = y = 0
        for k, letter in enumerate(self.steps):
            if letter not in _LETTERS2:
                raise ValidationError(f"step {k} is {letter!r}, expected one of R, D, U")
            dx, dy = _tandem_displacement(self.model, letter)
            x, y = x + dx, y + dy
            if x < 0 or y < 0:
                raise ValidationError(
                    f"prefix of length {k + 1} leaves the quadrant at ({x}, {y})"
                )

    def endpoint(self) -> tuple[int, int]:
        m = self.model
        x = y = 0
        for letter in self.steps:
            dx, dy = _tandem_displacement(m, letter)
            x, y = x + dx, y + dy
        return (x, y)

    def is_excursion(self) -> bool:
        return self.endpoint() == (0, 0)


def phi(m: BallotModel, point: tuple[int, int, int]) -> tuple[int, int]:
    """The linear projection (x, y, z) -> (A*x - B*y, B*y - C*z)."""
    T = ballot_to_tandem(m)
    x, y, z = point
    return (T.A * x - T.B * y, T.B * y - T.C * z)


def map_walk_3to2(w: Walk3) -> Walk2:
    return Walk2(ballot_to_tandem(w.model), w.steps.translate(_3TO2))


def map_walk_2to3(w: Walk2) -> Walk3:
    return Walk3(tandem_to_ballot(w.model), w.steps.translate(_2TO3))


def reverse_reflect(w: Walk2) -> Walk2:
    """Reverse an excursion and swap R with U: an excursion of (C, B, A)."""
    if not w.is_excursion():
        raise ValidationError("reverse_reflect is defined on excursions only")
    return Walk2(w.model.swapped(), w.steps[::-1].translate(_REVERSE_SWAP))


def generate_ballot_walks(
    m: BallotModel,
    rounds: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[Walk3]:
    """Every cone walk ending at (a*n, b*n, c*n) with n = rounds, depth-first.

    Lexicographic in X < Y < Z.  Raises when the search tree exceeds the
    node budget.
    """
    if not isinstance(rounds, int) or rounds < 0:
        raise ValidationError(f"rounds must be a nonnegative integer, got {rounds!r}")
    T = ballot_to_tandem(m)
    tx, ty, tz = m.a * rounds, m.b * rounds, m.c * rounds
    out: list[Walk3] = []
    nodes = 0

    def rec(x: int, y: int, z: int, word: list[str]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(f"search exceeded the node budget of {node_budget}")
        if x == tx and y == ty and z == tz:
            out.append(Walk3(m, "".join(word)))
            return
        for letter, (dx, dy, dz) in zip(_LETTERS3, ((1, 0, 0), (0, 1, 0), (0, 0, 1))):
            nx, ny, nz = x + dx, y + dy, z + dz
            if nx > tx or ny > ty or nz > tz:
                continue
            if not (T.A * nx >= T.B * ny >= T.C * nz):
                continue
            word.append(letter)
            rec(nx, ny, nz, word)
            word.pop()

    rec(0, 0, 0, [])
    return out


def generate_quadrant_walks(
    m: TandemModel,
    length: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[Walk2]:
    """Every quadrant walk of the given length, depth-first in R < D < U."""
    return _generate_walks2(m, length, excursions_only=False, node_budget=node_budget)


def generate_excursions(
    m: TandemModel,
    length: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[Walk2]:
    """Every excursion of the given length, depth-first in R < D < U."""
    return _generate_walks2(m, length, excursions_only=True, node_budget=node_budget)


def _generate_walks2(
    m: TandemModel,
    length: int,
    excursions_only: bool,
    node_budget: int,
) -> list[Walk2]:
    if not isinstance(length, int) or length < 0:
        raise ValidationError(f"length must be a nonnegative integer, got {length!r}")
    out: list[Walk2] = []
    nodes = 0
    displacements = [(letter, _tandem_displacement(m, letter)) for letter in _LETTERS2]

    def rec(x: int, y: int, remaining: int, word: list[str]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceededError(f"search exceeded the node budget of {node_budget}")
        if remaining == 0:
            if not excursions_only or (x == 0 and y == 0):
                out.append(Walk2(m, "".join(word)))
            return
        for letter, (dx, dy) in displacements:
            nx, ny = x + dx, y + dy
            if nx < 0 or ny < 0:
                continue
            # an excursion must still be able to drain both coordinates
            if excursions_only and (nx > (remaining - 1) * m.B or ny > (remaining - 1) * m.C):
                continue
            word.append(letter)
            rec(nx, ny, remaining - 1, word)
            word.pop()

    rec(0, 0, length, [])
    return out
