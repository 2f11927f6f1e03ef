"""Exact and floating-point enumeration of quarter-plane and cone walks.

The workhorse is a dense level-by-level dynamic program over the rectangle
reachable in n steps.  Each transition is a shifted slice-add on a numpy
array; with object dtype the arithmetic is exact big-integer arithmetic, and
with float64 the grid is rescaled to unit maximum after every level while a
running log-offset keeps track of the true magnitude (never raw floats,
which would overflow beyond a few hundred steps).

Coordinates are compressed by the lattice the steps actually span: every
reachable x is a multiple of gcd of the horizontal displacements and likewise
for y, so the grid indexes multiples rather than raw coordinates.  For tandem
steps (A,0), (-B,B), (0,-C) this cuts the cell count by gcd(A,B)*gcd(B,C).

Work is metered in swept cells, checked upfront against a budget, so a
mistyped n_max fails fast instead of thrashing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, log
from typing import Iterator

import numpy as np

from .errors import BudgetExceededError, ValidationError
from .models import BallotModel, StepSet, TandemModel, ballot_to_tandem

DEFAULT_CELL_BUDGET = 200_000_000

# unit steps of the 3D ballot walk, in fixed order
_BALLOT_STEPS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class CountSequence:
    """Terms t_0..t_n of a counting sequence.

    ``values`` holds exact integers in ``exact`` mode and natural logs
    (``-inf`` for zero counts) in ``logfloat`` mode.
    """

    model: TandemModel | BallotModel | None
    what: str
    mode: str
    values: tuple

    def __post_init__(self) -> None:
        if self.mode not in ("exact", "logfloat"):
            raise ValidationError(f"mode must be 'exact' or 'logfloat', got {self.mode!r}")
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class QuadrantState:
    """Occupancy grid after ``level`` steps, in lattice-compressed indices.

    ``grid[i, j]`` counts walks ending at (i * gx, j * gy); ``log_scale`` is
    the accumulated rescaling offset (always 0.0 in exact mode).
    """

    level: int
    grid: np.ndarray
    gx: int
    gy: int
    log_scale: float = 0.0

    def occupancy(self) -> dict[tuple[int, int], object]:
        out = {}
        for (i, j), v in np.ndenumerate(self.grid):
            if v:
                out[(i * self.gx, j * self.gy)] = v
        return out


def _validate_n_max(n_max: int) -> None:
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 0:
        raise ValidationError(f"n_max must be a nonnegative integer, got {n_max!r}")


def _lattice(values: list[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g or 1


def _iter_levels(
    s: StepSet,
    n_max: int,
    mode: str,
    cell_budget: int,
) -> Iterator[QuadrantState]:
    """Yield quadrant occupancy levels 0..n_max for walks started at the origin."""
    gx = _lattice([i for i, _ in s.steps])
    gy = _lattice([j for _, j in s.steps])
    scaled = [(i // gx, j // gy) for i, j in s.steps]
    dxm = max((i for i, _ in scaled if i > 0), default=0)
    dym = max((j for _, j in scaled if j > 0), default=0)

    swept = sum((n * dxm + 1) * (n * dym + 1) for n in range(1, n_max + 1)) + 1
    if swept > cell_budget:
        raise BudgetExceededError(
            f"level sweep needs {swept} cells, budget is {cell_budget}"
        )

    dtype = object if mode == "exact" else np.float64
    cur = np.zeros((1, 1), dtype=dtype)
    cur[0, 0] = 1 if mode == "exact" else 1.0
    offset = 0.0
    yield QuadrantState(0, cur, gx, gy, offset)

    for n in range(1, n_max + 1):
        w0, h0 = cur.shape
        nxt = np.zeros((n * dxm + 1, n * dym + 1), dtype=dtype)
        for si, sj in scaled:
            ox = max(0, -si)  # source offset for negative displacement
            oy = max(0, -sj)
            if ox >= w0 or oy >= h0:
                continue
            dx = max(0, si)
            dy = max(0, sj)
            nxt[dx:dx + w0 - ox, dy:dy + h0 - oy] += cur[ox:w0, oy:h0]
        if mode == "logfloat":
            peak = nxt.max()
            if peak > 0.0:
                nxt /= peak
                offset += log(peak)
        cur = nxt
        yield QuadrantState(n, cur, gx, gy, offset)


def _term(grid_value, mode: str, log_scale: float):
    if mode == "exact":
        return int(grid_value)
    v = float(grid_value)
    return log(v) + log_scale if v > 0.0 else float("-inf")


def count_excursions(
    s: StepSet,
    n_max: int,
    mode: str = "exact",
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> CountSequence:
    """Numbers e_0..e_{n_max} of quarter-plane walks from the origin back to it."""
    return count_endpoint(s, n_max, (0, 0), mode, cell_budget)


def count_endpoint(
    s: StepSet,
    n_max: int,
    target: tuple[int, int],
    mode: str = "exact",
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> CountSequence:
    """Numbers of quarter-plane walks from the origin to ``target``."""
    _validate_n_max(n_max)
    ti, tj = target
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in (ti, tj)) or ti < 0 or tj < 0:
        raise ValidationError(f"target must be a quadrant point, got {target!r}")
    zero = 0 if mode == "exact" else float("-inf")
    terms = []
    for state in _iter_levels(s, n_max, mode, cell_budget):
        qi, ri = divmod(ti, state.gx)
        qj, rj = divmod(tj, state.gy)
        if ri or rj or qi >= state.grid.shape[0] or qj >= state.grid.shape[1]:
            terms.append(zero)
        else:
            terms.append(_term(state.grid[qi, qj], mode, state.log_scale))
    what = "excursions" if target == (0, 0) else f"endpoint:{ti},{tj}"
    return CountSequence(None, what, mode, tuple(terms))


def count_walks_total(
    s: StepSet,
    n_max: int,
    mode: str = "exact",
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> CountSequence:
    """Numbers q_0..q_{n_max} of quarter-plane walks with free endpoint.

    Exact mode avoids a full-grid big-integer sum per level by the recurrence
    q_{n+1} = |S| * q_n - (walks that would step outside the quadrant), the
    loss being a sum over two boundary slabs per step.
    """
    _validate_n_max(n_max)
    if mode == "exact":
        if n_max == 0:
            return CountSequence(None, "total", mode, (1,))
        scaled_slabs = None
        q = [1]
        for state in _iter_levels(s, n_max - 1, mode, cell_budget):
            if scaled_slabs is None:
                scaled_slabs = [(-(i // state.gx), -(j // state.gy)) for i, j in s.steps]
            grid = state.grid
            loss = 0
            for bx, by in scaled_slabs:
                # x + i < 0  <=>  scaled index < -i/gx; then y-violations among the rest
                if bx > 0:
                    slab = grid[: min(bx, grid.shape[0]), :]
                    if slab.size:
                        loss += int(slab.sum())
                if by > 0:
                    slab = grid[max(bx, 0):, : min(by, grid.shape[1])]
                    if slab.size:
                        loss += int(slab.sum())
            q.append(len(s.steps) * q[-1] - loss)
        return CountSequence(None, "total", mode, tuple(q))

    terms = []
    for state in _iter_levels(s, n_max, mode, cell_budget):
        total = float(state.grid.sum())
        terms.append(log(total) + state.log_scale if total > 0.0 else float("-inf"))
    return CountSequence(None, "total", mode, tuple(terms))


def count_ballot_3d(
    m: BallotModel,
    rounds_max: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> CountSequence:
    """Exact counts of cone walks ending at (a*n, b*n, c*n), n = 0..rounds_max.

    Direct sparse dynamic program over the cone A*x >= B*y >= C*z >= 0; a walk
    reaching (a*N, b*N, c*N) never exceeds those coordinates because each
    coordinate is nondecreasing, which bounds the state space.
    """
    _validate_n_max(rounds_max)
    T = ballot_to_tandem(m)
    A, B, C = T.A, T.B, T.C
    xm, ym, zm = m.a * rounds_max, m.b * rounds_max, m.c * rounds_max
    terms = [1]
    cur: dict[tuple[int, int, int], int] = {(0, 0, 0): 1}
    swept = 1
    for t in range(1, m.period * rounds_max + 1):
        nxt: dict[tuple[int, int, int], int] = {}
        for (x, y, z), v in cur.items():
            for dx, dy, dz in _BALLOT_STEPS:
                nx, ny, nz = x + dx, y + dy, z + dz
                if nx > xm or ny > ym or nz > zm:
                    continue
                if A * nx >= B * ny >= C * nz >= 0:
                    key = (nx, ny, nz)
                    nxt[key] = nxt.get(key, 0) + v
        cur = nxt
        swept += len(cur)
        if swept > cell_budget:
            raise BudgetExceededError(
                f"cone sweep exceeded the cell budget of {cell_budget} at step {t}"
            )
        n, rem = divmod(t, m.period)
        if rem == 0:
            terms.append(cur.get((m.a * n, m.b * n, m.c * n), 0))
    return CountSequence(m, "ballot", "exact", tuple(terms))


def empirical_period(e: CountSequence) -> int:
    """gcd of the indices n >= 1 with a nonzero term."""
    if e.mode == "exact":
        support = [n for n in range(1, e.n_max + 1) if e.values[n] != 0]
    else:
        support = [n for n in range(1, e.n_max + 1) if e.values[n] != float("-inf")]
    if not support:
        raise ValidationError("period undefined: every term with n >= 1 is zero")
    return gcd(*support)


def reachable_from_infinity(
    s: StepSet,
    depth_bound: int,
) -> tuple[tuple[int, int], tuple[tuple[int, int], ...]] | None:
    """A strictly positive quadrant point with a walk to the origin, or None.

    Breadth-first search backwards from the origin through reversed steps,
    restricted to the quadrant; ties within a depth are broken by
    lexicographic point order, so the result is deterministic.
    """
    if not isinstance(depth_bound, int) or isinstance(depth_bound, bool) or depth_bound < 0:
        raise ValidationError(f"depth_bound must be a nonnegative integer, got {depth_bound!r}")
    visited = {(0, 0)}
    frontier = [(0, 0)]
    parent: dict[tuple[int, int], tuple[tuple[int, int], tuple[int, int]]] = {}
    for _ in range(depth_bound):
        discovered = []
        for x, y in frontier:
            for i, j in s.steps:
                q = (x - i, y - j)
                if q[0] >= 0 and q[1] >= 0 and q not in visited:
                    visited.add(q)
                    parent[q] = ((x, y), (i, j))
                    discovered.append(q)
        positives = sorted(q for q in discovered if q[0] > 0 and q[1] > 0)
        if positives:
            start = positives[0]
            path = []
            cur = start
            while cur != (0, 0):
                cur, step = parent[cur]
                path.append(step)
            return start, tuple(path)
        if not discovered:
            return None
        frontier = sorted(discovered)
    return None
