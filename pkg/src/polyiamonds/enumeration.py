"""Exhaustive enumeration of polyiamonds and the extremal searches built on it.

Work is split into tasks by the first growth choices below each of the two
possible roots (up- or down-triangle).  Tasks are independent; results are
merged in task order, so output does not depend on how many workers ran.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import bounds, kernel
from .polyiamond import Polyiamond

DEFAULT_CAP = 16
DEFAULT_SEARCH_CAP = 24
PARTITION_DEPTH = 2


class CapExceeded(ValueError):
    pass


class NotFoundWithinCap(LookupError):
    def __init__(self, h, lower_bound, n_cap):
        self.h, self.lower_bound, self.n_cap = h, lower_bound, n_cap
        super().__init__(
            f"no polyiamond with {h} holes and {lower_bound} <= n <= {n_cap} tiles"
        )


def _check_cap(n, cap):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")


def default_jobs() -> int:
    return os.cpu_count() or 1


def plan_tasks(n: int, depth: int = PARTITION_DEPTH) -> list[tuple[int, tuple]]:
    """Disjoint ``(root_col, prefix)`` tasks that together cover every shape."""
    depth = min(depth, n - 1)
    tasks = []

    def expand(root_col, prefix):
        if len(prefix) == depth:
            tasks.append((root_col, prefix))
            return
        for t in range(kernel.branches(n, root_col, prefix)):
            expand(root_col, prefix + (t,))

    for root_col in (0, 1):
        expand(root_col, ())
    return tasks


@dataclass(frozen=True)
class _Job:
    n: int
    root_col: int
    prefix: tuple
    b_budget: int = -1
    target: int = 0
    free: bool = False


def _pmin_table(n):
    return [0] + [bounds.p_min(i) for i in range(1, 2 * n + 1)]


def _run(job: _Job):
    keys = set() if job.free else None
    raw = kernel.grow(job.n, job.root_col, job.prefix, job.b_budget, job.target,
                      _pmin_table(job.n), None, keys)
    return raw, keys


def _map(jobs_list, jobs, stop_on_hit=False):
    if jobs <= 1 or len(jobs_list) <= 1:
        out = []
        for job in jobs_list:
            res = _run(job)
            out.append(res)
            if stop_on_hit and res[0][7] is not None:
                break
        return out
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, jobs_list))


@dataclass(frozen=True)
class EnumStats:
    """Exhaustive statistics over the fixed ``n``-tile polyiamonds.

    ``free_count`` is None unless free classes were requested.
    """

    n: int
    fixed_count: int
    free_count: int | None
    min_perimeter: int
    min_interior: int
    max_holes: int
    witness_max_holes: Polyiamond
    hole_histogram: tuple
    bound_violations: int

    def as_row(self) -> dict:
        return {
            "n": self.n,
            "fixed": self.fixed_count,
            "free": self.free_count,
            "min_perimeter": self.min_perimeter,
            "p_min": bounds.p_min(self.n),
            "min_interior": self.min_interior,
            "max_holes": self.max_holes,
            "bound_violations": self.bound_violations,
        }


@dataclass
class _Merged:
    count: int = 0
    min_b: int = -1
    max_b: int = -1
    max_holes: int = -1
    witness: tuple | None = None
    hist: list | None = None
    violations: int = 0
    hit: tuple | None = None
    keys: set | None = None


def _merge(results, n) -> _Merged:
    m = _Merged(hist=[0] * (n + 1))
    for raw, keys in results:
        count, min_b, max_b, max_holes, witness, hist, violations, hit = raw
        if count == 0:
            continue
        m.count += count
        if m.min_b < 0 or min_b < m.min_b:
            m.min_b = min_b
        m.max_b = max(m.max_b, max_b)
        if max_holes > m.max_holes:
            m.max_holes, m.witness = max_holes, witness
        m.hist = [a + b for a, b in zip(m.hist, hist)]
        m.violations += violations
        if m.hit is None and hit is not None:
            m.hit = hit
        if keys is not None:
            m.keys = keys if m.keys is None else m.keys | keys
    return m


def enumerate_fixed(n: int, visitor, cap: int = DEFAULT_CAP) -> None:
    """Call ``visitor(Polyiamond)`` once per fixed ``n``-tile polyiamond."""
    _check_cap(n, cap)
    for root_col, prefix in plan_tasks(n):
        kernel.grow(n, root_col, prefix, -1, 0, None,
                    lambda cells: visitor(Polyiamond(frozenset(cells))))


def enumerate_stats(n: int, free: bool = False, jobs: int | None = None,
                    cap: int = DEFAULT_CAP) -> EnumStats:
    _check_cap(n, cap)
    jobs = default_jobs() if jobs is None else jobs
    work = [_Job(n, rc, p, free=free) for rc, p in plan_tasks(n)]
    m = _merge(_map(work, jobs), n)
    return EnumStats(
        n=n,
        fixed_count=m.count,
        free_count=len(m.keys) if free else None,
        min_perimeter=3 * n - 2 * m.max_b,
        min_interior=m.min_b,
        max_holes=m.max_holes,
        witness_max_holes=Polyiamond(frozenset(m.witness)),
        hole_histogram=tuple(m.hist),
        bound_violations=m.violations,
    )


def fixed_count(n: int, jobs: int | None = None, cap: int = DEFAULT_CAP) -> int:
    return enumerate_stats(n, jobs=jobs, cap=cap).fixed_count


def count_free(n: int, jobs: int | None = None, cap: int = DEFAULT_CAP) -> int:
    return enumerate_stats(n, free=True, jobs=jobs, cap=cap).free_count


def empirical_pmin(n: int, jobs: int | None = None, cap: int = DEFAULT_CAP) -> int:
    return enumerate_stats(n, jobs=jobs, cap=cap).min_perimeter


def empirical_bmin(n: int, jobs: int | None = None, cap: int = DEFAULT_CAP) -> int:
    return enumerate_stats(n, jobs=jobs, cap=cap).min_interior


@dataclass(frozen=True)
class PrunedSearch:
    """Outcome of a search restricted to shapes that could hold ``h`` holes."""

    n: int
    h: int
    visited: int
    exact: Polyiamond | None
    max_holes: int
    witness_max_holes: Polyiamond | None


def search_holes(n: int, h: int, jobs: int | None = None,
                 n_cap: int = DEFAULT_SEARCH_CAP) -> PrunedSearch:
    """Look for an ``n``-tile polyiamond with exactly ``h`` holes.

    Only shapes whose interior edge count fits the budget implied by
    ``h`` holes are grown, which keeps the search exhaustive for every shape
    with at least ``h`` holes.  Stops at the first exact hit in task order.
    """
    _check_cap(n, n_cap)
    jobs = default_jobs() if jobs is None else jobs
    budget = bounds.interior_edge_budget(n, h)
    if budget < n - 1:
        return PrunedSearch(n, h, 0, None, -1, None)
    work = [_Job(n, rc, p, b_budget=budget, target=h) for rc, p in plan_tasks(n)]
    m = _merge(_map(work, jobs, stop_on_hit=True), n)
    as_shape = (lambda cells: None if cells is None else Polyiamond(frozenset(cells)))
    return PrunedSearch(n, h, m.count, as_shape(m.hit), m.max_holes, as_shape(m.witness))


def f_max_holes(n: int, jobs: int | None = None, cap: int = DEFAULT_CAP,
                search_cap: int = DEFAULT_SEARCH_CAP) -> EnumStats | PrunedSearch:
    """Maximum hole count over ``n``-tile polyiamonds.

    Up to ``cap`` tiles this is a full enumeration and returns
    :class:`EnumStats`.  Beyond it the bound M rules out large hole counts and
    pruned searches settle the rest, returning the deciding
    :class:`PrunedSearch` (its ``max_holes`` is the answer).
    """
    if n <= cap:
        return enumerate_stats(n, jobs=jobs, cap=cap)
    _check_cap(n, search_cap)
    for h in range(bounds.f_upper_bound(n), 0, -1):
        res = search_holes(n, h, jobs=jobs, n_cap=search_cap)
        if res.exact is not None:
            return PrunedSearch(n, h, res.visited, res.exact, h, res.exact)
        if res.max_holes >= h:
            return res
    return PrunedSearch(n, 0, 0, None, 0, None)


@dataclass(frozen=True)
class GSearch:
    h: int
    n: int
    witness: Polyiamond
    witness_holes: int
    lower_bound: int

    @property
    def exact(self) -> bool:
        return self.witness_holes == self.h

    def as_row(self) -> dict:
        return {
            "h": self.h,
            "n": self.n,
            "lower_bound": self.lower_bound,
            "witness_holes": self.witness_holes,
            "exact": self.exact,
        }


def g_min_tiles(h: int, n_cap: int = DEFAULT_SEARCH_CAP, jobs: int | None = None) -> GSearch:
    """Fewest tiles admitting ``h`` holes, scanning up from the bound M.

    Returns the first ``n`` with a shape holding at least ``h`` holes;
    ``exact`` tells whether that witness has exactly ``h``.
    """
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    lower = bounds.g_lower_bound(h)
    for n in range(lower, n_cap + 1):
        res = search_holes(n, h, jobs=jobs, n_cap=n_cap)
        if res.exact is not None:
            return GSearch(h, n, res.exact, h, lower)
        if res.max_holes >= h:
            return GSearch(h, n, res.witness_max_holes, res.max_holes, lower)
    raise NotFoundWithinCap(h, lower, n_cap)
