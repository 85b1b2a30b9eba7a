"""Datasets behind the realism-vs-theta figures.

Fixed parameters: ``f(theta) = theta/3`` and
``phi_ab = pi/5`` for the classical panels; ``ell = 6``, ``qK = 2 pi/25``
and mean flux ``5/2`` quanta (so ``phi_ab = pi/5`` classically) for the
quantized panels, using even superpositions over the index sets in
``FIG3_SETS``. The quantized panels take ``f = 0``.
"""

import json
import math
import os
from typing import Dict, List, Tuple

import numpy as np

from . import classical as cl
from . import quantized as qz
from .config import GridSpec, MeasureSpec, RunConfig
from .measures import realism
from .sweep import (
    HALF_PI,
    SweepRecord,
    config_columns,
    evaluate_grid,
    theta_grid,
    write_csv,
)

PHI_AB = math.pi / 5
F_FIG2 = cl.PhaseProfile.linear(1.0 / 3.0)
ELL = 6
QK = 2 * math.pi / 25
FIG3_SETS: Tuple[Tuple[int, ...], ...] = ((2, 3), (1, 2, 3, 4), (0, 1, 2, 3, 4, 5), tuple(range(-1, 7)))
FIGURES = ("fig2a", "fig2b", "fig2c", "fig3a", "fig3b", "fig3c", "fig3d", "fig4a", "fig4b")

_ZERO = cl.PhaseProfile.zero()


def set_label(ms) -> str:
    return "m=" + ",".join(str(m) for m in ms)


def _fig2(name, grid):
    if name == "fig2a":
        cfg = RunConfig(
            kind="standard",
            f=F_FIG2,
            grid=grid,
            measures=(
                MeasureSpec("sigma_z", "sigma_z"),
                MeasureSpec("sigma_x", "sigma_g", g=_ZERO),
                MeasureSpec("sigma_y", "sigma_g", g=_ZERO, delta=HALF_PI),
                MeasureSpec("sigma_f", "sigma_g", g="f"),
            ),
        )
    else:
        cfg = RunConfig(
            kind="classical-ab",
            f=F_FIG2,
            phi_ab=PHI_AB,
            grid=grid,
            measures=(
                MeasureSpec("sigma_z", "sigma_z"),
                MeasureSpec("sigma_xA", "sigma_gA", g="f"),
                MeasureSpec("sigma_yA", "sigma_gA", g="f", delta=HALF_PI),
            ),
        )
    return cfg


def fig2c_records(count=1001) -> List[SweepRecord]:
    """Realism jump of ``sigma_{f+delta}^A`` against ``delta`` in ``[0, pi/2]``.

    The ``theta`` column holds ``delta``. Each value is the difference of
    the two one-sided dephasing evaluations at the crossing.
    """
    scenario = cl.ClassicalScenario(F_FIG2, PHI_AB)
    rho = cl.charge_state(HALF_PI, scenario)
    records = []
    for delta in np.linspace(0.0, HALF_PI, count):
        post = realism(rho, cl.sigma_gA(HALF_PI, F_FIG2, scenario, delta, "post"))
        pre = realism(rho, cl.sigma_gA(HALF_PI, F_FIG2, scenario, delta, "pre"))
        records.append(SweepRecord(float(delta), "delta_realism", post - pre, "n/a"))
    return records


_FIG3_MEASURE = {
    "fig3a": MeasureSpec("sigma_z", "sigma_z_reduced"),
    "fig3b": MeasureSpec("sigma_x", "sigma_g_reduced", g=_ZERO),
    "fig3c": MeasureSpec("sigma_y", "sigma_g_reduced", g=_ZERO, delta=HALF_PI),
    "fig3d": MeasureSpec("sigma_xA_m-1", "branch", m=-1),
}
_FIG3_CLASSICAL = {
    "fig3a": MeasureSpec("sigma_z", "sigma_z"),
    "fig3b": MeasureSpec("sigma_x", "sigma_g", g=_ZERO),
    "fig3c": MeasureSpec("sigma_y", "sigma_g", g=_ZERO, delta=HALF_PI),
}


def _quantized_config(ms, measure, grid):
    return RunConfig(kind="quantized-ab", ell=ELL, qK=QK, populated=tuple(ms), grid=grid, measures=(measure,))


def _fig3_columns(name, grid):
    spec = _FIG3_MEASURE[name]
    columns = []
    for ms in FIG3_SETS:
        cfg = _quantized_config(ms, spec, grid)
        columns += config_columns(cfg, lambda n, ms=ms: f"{n}[{set_label(ms)}]")
    classical = cl.ClassicalScenario(_ZERO, PHI_AB)
    label = f"{spec.name}[classical]"
    if name == "fig3d":
        # the m = -1 branch operator applied to the classical-flux charge state
        qs = qz.QuantizedScenario(qz.CylinderState.eigenstate(ELL, -1), QK)
        columns.append(
            (
                label,
                lambda th, side: realism(cl.charge_state(th, classical), qz.sigma_xA_branch(th, -1, qs, side)),
                True,
            )
        )
    else:
        cfg = RunConfig(kind="classical-ab", phi_ab=PHI_AB, grid=grid, measures=(_FIG3_CLASSICAL[name],))
        columns += config_columns(cfg, lambda n: label)
    return columns


def _fig4_columns(name, grid):
    obs = "Sigma_x" if name == "fig4a" else "Sigma_y"
    columns = []
    for ms in FIG3_SETS:
        cfg = _quantized_config(ms, MeasureSpec(obs, obs), grid)
        columns += config_columns(cfg, lambda n, ms=ms: f"{n}[{set_label(ms)}]")
    return columns


def fig4_metadata() -> Dict[str, float]:
    scenario = qz.QuantizedScenario(qz.CylinderState.eigenstate(ELL, 0), QK)
    floor = qz.realism_sigma_z_joint(scenario, qz.joint_context(scenario))
    return {
        "ell": ELL,
        "qK": QK,
        "base": 4 * ELL + 2,
        "local_observable_floor": floor,
        "local_observable_floor_expr": f"log_{4 * ELL + 2}({2 * ELL + 1})",
    }


def figure_records(name: str, count: int = 1001) -> List[SweepRecord]:
    if name not in FIGURES:
        raise KeyError(f"unknown figure {name!r}; expected one of {', '.join(FIGURES)}")
    if name == "fig2c":
        return fig2c_records(count)
    grid = GridSpec(count=count)
    if name in ("fig2a", "fig2b"):
        cfg = _fig2(name, grid)
        columns = config_columns(cfg)
    elif name.startswith("fig3"):
        columns = _fig3_columns(name, grid)
    else:
        columns = _fig4_columns(name, grid)
    return evaluate_grid(columns, theta_grid(grid), crossing=True)


def plot_records(records, path, title=None, xlabel=r"$\theta$") -> None:
    """Write an SVG of value against theta, drawing the branches on each side
    of the crossing as separate curves."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4))
    names = sorted({r.measure for r in records})
    for k, name in enumerate(names):
        color = f"C{k % 10}"
        rows = [r for r in records if r.measure == name]
        pieces = [[r for r in rows if r.branch == b] for b in ("pre", "post")]
        if not any(pieces):
            pieces = [rows]
        for j, piece in enumerate(p for p in pieces if p):
            ax.plot(
                [r.theta for r in piece],
                [r.value for r in piece],
                color=color,
                label=name if j == 0 else None,
            )
    ax.set_xlabel(xlabel)
    ax.set_ylabel("realism")
    if title:
        ax.set_title(title)
    ax.legend(fontsize="small")
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def write_figure(name: str, outdir, plot: bool = False, count: int = 1001) -> List[str]:
    """Write ``<name>.csv`` (and ``<name>.svg``, ``<name>.meta.json`` where
    applicable) into ``outdir``. Returns the written paths."""
    records = figure_records(name, count)
    os.makedirs(outdir, exist_ok=True)
    paths = [os.path.join(outdir, f"{name}.csv")]
    write_csv(records, paths[0])
    if name.startswith("fig4"):
        meta = os.path.join(outdir, f"{name}.meta.json")
        with open(meta, "w", encoding="utf-8") as fh:
            json.dump(fig4_metadata(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        paths.append(meta)
    if plot:
        svg = os.path.join(outdir, f"{name}.svg")
        plot_records(records, svg, title=name, xlabel=r"$\delta$" if name == "fig2c" else r"$\theta$")
        paths.append(svg)
    return paths
