"""The reproduction checks, one function per claim.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in order.
The CLI's ``verify-paper`` command and the acceptance tests both go through
here, so there is a single definition of what "reproduced" means.
"""
from __future__ import annotations

import contextlib
import hashlib
import io
import os
import subprocess
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds, oracles, spiral
from .enumeration import count_free, enumerate_fixed, enumerate_stats, f_max_holes, g_min_tiles
from .polyiamond import holes, interior_edges, perimeter

DEFAULT_KMAX = 50
DEFAULT_NCAP = 12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def check_formula(n_enum: int = 10, n_increments: int = 10**6, jobs: int | None = 1) -> CheckResult:
    """p_min agrees with exhaustive minima; increments are always +-1."""
    bad = []
    for n in range(1, n_enum + 1):
        got = enumerate_stats(n, jobs=jobs).min_perimeter
        if got != bounds.p_min(n):
            bad.append((n, got, bounds.p_min(n)))
    inc = bounds.verify_pmin_increments(n_increments)
    ok = not bad and inc
    detail = (f"p_min = exhaustive minimum for n<={n_enum}"
              f"{'' if not bad else f' (mismatches {bad})'}; "
              f"unit increments up to {n_increments}: {inc}")
    return CheckResult("formula", ok, detail)


def check_identities(ncap: int = DEFAULT_NCAP, kmax: int = 30) -> CheckResult:
    """3n = p + 2b and p = p_out + p_h on every enumerated shape and spiral."""
    tally = {"shapes": 0, "bad": 0}

    def visit(A):
        p, b = perimeter(A), interior_edges(A)
        s = holes(A)
        tally["shapes"] += 1
        if 3 * A.n != p + 2 * b or p != s.outer_perimeter + s.hole_perimeter:
            tally["bad"] += 1

    for n in range(1, ncap + 1):
        enumerate_fixed(n, visit, cap=max(ncap, 1))
    for k in range(2, kmax + 1):
        visit(spiral.spir(k))
    ok = tally["bad"] == 0
    return CheckResult(
        "identities", ok,
        f"{tally['shapes']} shapes (n<={ncap}, spir k<={kmax}), {tally['bad']} failures",
    )


def _m_monotone(n_max: int, h_max: int) -> bool:
    # 3 M(n, h) = n + 2 - p_min(n + h); compare consecutive n for each h
    p = [0] + [bounds.p_min(i) for i in range(1, n_max + h_max + 2)]
    for h in range(h_max + 1):
        prev = 3 - p[1 + h]
        for n in range(2, n_max + 1):
            cur = n + 2 - p[n + h]
            if cur < prev:
                return False
            prev = cur
    return True


def check_bound(ncap: int = DEFAULT_NCAP, n_mono: int = 10**5, h_mono: int = 100,
                jobs: int | None = 1) -> CheckResult:
    """No enumerated shape beats M; M is non-decreasing in n."""
    violations = 0
    shapes = 0
    for n in range(1, ncap + 1):
        st = enumerate_stats(n, jobs=jobs, cap=max(ncap, 1))
        violations += st.bound_violations
        shapes += st.fixed_count
    mono = _m_monotone(n_mono, h_mono)
    ok = violations == 0 and mono
    return CheckResult(
        "bound", ok,
        f"{violations} violations over {shapes} shapes (n<={ncap}); "
        f"M non-decreasing for n<={n_mono}, h<={h_mono}: {mono}",
    )


def check_spiral_bounds(kmax: int = 1000) -> CheckResult:
    """M(n_k, h_k) = h_k, M(n_k - 1, h_k) < h_k and g_lower_bound(h_k) = n_k."""
    bad = []
    for k in range(2, kmax + 1):
        h, n = spiral.seq_h(k), spiral.seq_n(k)
        at = bounds.m_bound(n, h).m_value
        below = bounds.m_bound(n - 1, h).m_value
        if not (at == Fraction(h) and below < h and bounds.g_lower_bound(h) == n):
            bad.append(k)
    return CheckResult("spiral bounds", not bad,
                       f"k=2..{kmax}, failing k: {bad[:10] if bad else 'none'}")


def check_certificates(kmax: int = DEFAULT_KMAX) -> CheckResult:
    """certify(k) passes with p_out = p_min(6k^2 - 2); spot value at k = 15."""
    bad = []
    for k in range(2, kmax + 1):
        cert = spiral.certify(k)
        if not cert.passes or cert.p_min_of_filled != bounds.p_min(6 * k * k - 2):
            bad.append(k)
    spot = spiral.certify(15)
    spot_ok = spot.tiles == 1033 and spot.holes == 315 and spot.passes
    ok = not bad and spot_ok
    return CheckResult(
        "certificates", ok,
        f"k=2..{kmax} failing: {bad or 'none'}; k=15 -> {spot.tiles} tiles, {spot.holes} holes",
    )


def check_ground_truth(jobs: int | None = 1) -> CheckResult:
    """Free counts against the naive oracle, small f values, g(1) and g(3)."""
    notes = []
    ok = True
    for n in range(1, 7):
        fast, slow = count_free(n, jobs=jobs), oracles.naive_free_count(n)
        if fast != slow:
            ok = False
            notes.append(f"free({n}) {fast}!={slow}")
    fs = [f_max_holes(n, jobs=jobs).max_holes for n in range(1, 10)]
    if fs != [0] * 8 + [1]:
        ok = False
    notes.append(f"f(1..9)={fs}")
    for h, want in ((1, 9), (3, 19)):
        g = g_min_tiles(h, jobs=jobs)
        witness_ok = g.witness.n == g.n and holes(g.witness).count == h
        if g.n != want or not g.exact or not witness_ok:
            ok = False
        notes.append(f"g({h})={g.n}")
    return CheckResult("ground truth", ok, ", ".join(notes))


def _svg_digest_in_subprocess(k: int, seed: str) -> str:
    code = ("import hashlib, sys; from polyiamonds.io_render import to_svg; "
            "from polyiamonds.spiral import spir; "
            f"sys.stdout.write(hashlib.sha256(to_svg(spir({k})).encode()).hexdigest())")
    env = dict(os.environ, PYTHONHASHSEED=seed)
    return subprocess.run([sys.executable, "-c", code], env=env, check=True,
                          capture_output=True, text=True).stdout


def check_determinism(n: int = 10) -> CheckResult:
    """Enumeration tables are independent of --jobs; SVG output is byte-stable."""
    from .cli import main

    tables = []
    for jobs in (1, 8):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            main(["enumerate", str(n), "--free", "--jobs", str(jobs)])
        tables.append(buf.getvalue())
    same_table = tables[0] == tables[1]
    from .io_render import to_svg
    here = hashlib.sha256(to_svg(spiral.spir(15)).encode()).hexdigest()
    digests = {here} | {_svg_digest_in_subprocess(15, s) for s in ("0", "1", "12345")}
    same_svg = len(digests) == 1
    return CheckResult(
        "determinism", same_table and same_svg,
        f"enumerate {n} jobs 1 vs 8 identical: {same_table}; "
        f"spir(15) SVG sha256 stable across 4 runs: {same_svg} ({here[:12]})",
    )


def run_all(kmax: int = DEFAULT_KMAX, ncap: int = DEFAULT_NCAP, jobs: int | None = 1,
            report=None) -> list[CheckResult]:
    checks = [
        lambda: check_formula(jobs=jobs),
        lambda: check_identities(ncap=ncap, kmax=min(30, kmax)),
        lambda: check_bound(ncap=ncap, jobs=jobs),
        lambda: check_spiral_bounds(),
        lambda: check_certificates(kmax=kmax),
        lambda: check_ground_truth(jobs=jobs),
        lambda: check_determinism(),
    ]
    results = []
    for run in checks:
        res = run()
        results.append(res)
        if report is not None:
            report(res)
    return results
