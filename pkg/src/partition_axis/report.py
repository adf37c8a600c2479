"""CSV datasets over a range of n: axial parameters, maximizer locations,
shell distributions, and a run manifest with file checksums.

Output is deterministic: fields are plain integers, "--" markers, or
ratios rounded half-up to 4 decimals; rows are ordered by construction,
so two runs over the same range produce byte-identical CSV bodies.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .axial import central_region
from .invariants import INVARIANTS
from .pipeline import GraphAnalysis, analyze

UNDEFINED = "--"

BASIC_AXIAL_HEADER = "n,p_n,axial,a_n,sigma_n,c1_n,a_over_p,sigma_over_p,c1_over_p"
EXTREMAL_HEADER = "n,invariant,max,argmax_size,argmax_axis_count,rho_ax,rho_sp"
SHELLS_HEADER = "n,kind,k,count"

GOLDEN_RANGE_MAX = 30


def ratio_4dp(numerator: int, denominator: int) -> str:
    """numerator/denominator rounded half-up to exactly 4 decimals.

    Integer arithmetic only, so ties round predictably (e.g. 1/20000
    gives "0.0001", not "0.0000").
    """
    q = (2 * numerator * 10_000 + denominator) // (2 * denominator)
    return f"{q // 10_000}.{q % 10_000:04d}"


@dataclass(frozen=True)
class RangeSummary:
    """Everything the CSV reports need for one n, as plain values."""

    n: int
    p: int
    axial: bool
    a: int
    sigma: int | None
    c1: int | None
    extremal: dict[str, tuple[int, int, int | None, int | None, int | None]]
    ax_shells: tuple[int, ...] | None
    sp_shells: tuple[int, ...] | None
    seconds: float


def summarize(analysis: GraphAnalysis) -> RangeSummary:
    geom = analysis.geometry
    extremal = {}
    for inv in INVARIANTS:
        prof = analysis.profiles[inv]
        axis_hits = len(prof.argmax & geom.axis) if geom.is_axial else None
        extremal[inv] = (prof.max_value, len(prof.argmax), axis_hits, prof.rho_ax, prof.rho_sp)
    return RangeSummary(
        n=analysis.n,
        p=analysis.graph.num_vertices,
        axial=geom.is_axial,
        a=len(geom.axis),
        sigma=len(geom.spine) if geom.is_axial else None,
        c1=len(central_region(geom, 1)) if geom.is_axial else None,
        extremal=extremal,
        ax_shells=geom.ax_shells,
        sp_shells=geom.sp_shells,
        seconds=0.0,
    )


def _timed_summary(n: int) -> RangeSummary:
    start = time.perf_counter()
    summary = summarize(analyze(n))
    return replace(summary, seconds=time.perf_counter() - start)


def compute_summaries(n_min: int, n_max: int, threads: int = 1) -> list[RangeSummary]:
    """Per-n summaries in ascending n, optionally on a process pool."""
    ns = range(n_min, n_max + 1)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(_timed_summary, ns))
    return [_timed_summary(n) for n in ns]


def basic_axial_row(s: RangeSummary) -> str:
    if s.axial:
        return ",".join(
            [
                str(s.n), str(s.p), "yes", str(s.a), str(s.sigma), str(s.c1),
                ratio_4dp(s.a, s.p), ratio_4dp(s.sigma, s.p), ratio_4dp(s.c1, s.p),
            ]
        )
    return ",".join(
        [str(s.n), str(s.p), "no", str(s.a), UNDEFINED, UNDEFINED,
         ratio_4dp(s.a, s.p), UNDEFINED, UNDEFINED]
    )


def extremal_row(s: RangeSummary, invariant_id: str) -> str:
    max_value, argmax_size, axis_hits, rho_ax, rho_sp = s.extremal[invariant_id]
    tail = (
        [str(axis_hits), str(rho_ax), str(rho_sp)]
        if s.axial
        else [UNDEFINED, UNDEFINED, UNDEFINED]
    )
    return ",".join([str(s.n), invariant_id, str(max_value), str(argmax_size)] + tail)


def render_basic_axial(summaries: list[RangeSummary]) -> str:
    lines = [BASIC_AXIAL_HEADER] + [basic_axial_row(s) for s in summaries]
    return "\n".join(lines) + "\n"


def render_extremal_location(summaries: list[RangeSummary]) -> str:
    # Grouped by invariant, ascending n inside each block.
    lines = [EXTREMAL_HEADER]
    for inv in INVARIANTS:
        lines += [extremal_row(s, inv) for s in summaries]
    return "\n".join(lines) + "\n"


def render_shells(summaries: list[RangeSummary]) -> str:
    # Axisless n contribute no rows: their shells are undefined.
    lines = [SHELLS_HEADER]
    for s in summaries:
        if not s.axial:
            continue
        for kind, shells in (("ax", s.ax_shells), ("sp", s.sp_shells)):
            lines += [f"{s.n},{kind},{k},{count}" for k, count in enumerate(shells)]
    return "\n".join(lines) + "\n"


@dataclass
class RunManifest:
    n_min: int
    n_max: int
    timestamp: str
    version: str
    per_n_seconds: dict[int, float]
    files: dict[str, str] = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "timestamp": self.timestamp,
            "version": self.version,
            "per_n_seconds": {str(n): round(t, 6) for n, t in self.per_n_seconds.items()},
            "files": self.files,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _sha256(path: Path) -> str:
    return "sha256:" + hashlib.sha256(path.read_bytes()).hexdigest()


def run_range(n_min: int, n_max: int, out_dir: Path, threads: int = 1) -> list[Path]:
    """Emit basic_axial.csv, extremal_location.csv, shells.csv and
    manifest.json under out_dir; returns the written paths."""
    if n_min < 1 or n_min > n_max:
        raise ValueError(f"invalid range {n_min}..{n_max}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    summaries = compute_summaries(n_min, n_max, threads=threads)

    contents = {
        "basic_axial.csv": render_basic_axial(summaries),
        "extremal_location.csv": render_extremal_location(summaries),
        "shells.csv": render_shells(summaries),
    }
    written = []
    for name, text in contents.items():
        path = out_dir / name
        path.write_text(text, newline="\n")
        written.append(path)

    manifest = RunManifest(
        n_min=n_min,
        n_max=n_max,
        timestamp=datetime.now(timezone.utc).isoformat(),
        version=__version__,
        per_n_seconds={s.n: s.seconds for s in summaries},
        files={p.name: _sha256(p) for p in written},
    )
    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(manifest.to_json(), newline="\n")
    written.append(manifest_path)
    return written
