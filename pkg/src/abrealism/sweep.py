"""Theta sweeps over a run configuration, producing CSV-ready records.

Every value is computed by dephasing the scenario's state with the
requested observable; the closed forms in :mod:`abrealism.classical` and
:mod:`abrealism.quantized` are kept as independent checks.
"""

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from . import classical as cl
from . import quantized as qz
from .config import JOINT_OBSERVABLES, ConfigError, GridSpec, MeasureSpec, RunConfig
from .linalg import partial_trace
from .measures import MeasureContext, realism

HALF_PI = 0.5 * math.pi
JUMP_OBSERVABLES = ("sigma_gA", "branch", "Sigma_x", "Sigma_y")
CSV_HEADER = ("theta", "measure", "value", "branch")


@dataclass(frozen=True)
class SweepRecord:
    theta: float
    measure: str
    value: float
    branch: str = "n/a"

    def sort_key(self):
        return (self.theta, self.measure, self.branch)


def build_scenario(config: RunConfig):
    if config.kind == "quantized-ab":
        cyl = qz.CylinderState.even_superposition(config.ell, config.populated)
        return qz.QuantizedScenario(cyl, config.qK, config.f)
    return cl.ClassicalScenario(config.f, config.phi_ab, config.gauge)


def measure_context(spec: MeasureSpec, scenario) -> MeasureContext:
    if spec.observable in JOINT_OBSERVABLES:
        default = scenario.dim
    else:
        default = 2
    base = spec.base if spec.base is not None else float(default)
    n = spec.normalization_dim if spec.normalization_dim is not None else default
    return MeasureContext(base, n)


Evaluator = Callable[[float, Optional[str]], float]


def measure_evaluator(spec: MeasureSpec, scenario) -> Evaluator:
    """Return ``value(theta, side)`` for one measure of one scenario."""
    ctx = measure_context(spec, scenario)
    g = scenario.f if spec.g == "f" else spec.g
    obs = spec.observable

    if isinstance(scenario, cl.ClassicalScenario):
        if obs == "sigma_z":
            op = cl.sigma_z()
            return lambda th, side: realism(cl.charge_state(th, scenario), op, None, ctx)
        if obs == "sigma_g":
            return lambda th, side: realism(
                cl.charge_state(th, scenario), cl.sigma_g(th, g, spec.delta), None, ctx
            )
        if obs == "sigma_gA":
            return lambda th, side: realism(
                cl.charge_state(th, scenario),
                cl.sigma_gA(th, g, scenario, spec.delta, side),
                None,
                ctx,
            )
    else:
        def reduced(th):
            return partial_trace(qz.joint_state(th, scenario), "S")

        if obs == "sigma_z_reduced":
            op = cl.sigma_z()
            return lambda th, side: realism(reduced(th), op, None, ctx)
        if obs == "sigma_g_reduced":
            return lambda th, side: realism(reduced(th), cl.sigma_g(th, g, spec.delta), None, ctx)
        if obs == "branch":
            return lambda th, side: realism(
                reduced(th), qz.sigma_gA_branch(th, spec.m, scenario, spec.delta, side), None, ctx
            )
        if obs == "Sigma_x":
            return lambda th, side: realism(
                qz.joint_state(th, scenario), qz.Sigma_x(th, scenario, side), "whole", ctx
            )
        if obs == "Sigma_y":
            return lambda th, side: realism(
                qz.joint_state(th, scenario), qz.Sigma_y(th, scenario, side), "whole", ctx
            )
        if obs == "sigma_z_joint":
            op = cl.sigma_z()
            return lambda th, side: realism(qz.joint_state(th, scenario), op, "S", ctx)
    raise ConfigError(f"measure {spec.name!r}: cannot resolve observable {obs!r}")


def theta_grid(g: GridSpec) -> np.ndarray:
    thetas = np.linspace(g.start, g.end, g.count)
    return thetas[np.abs(thetas - HALF_PI) >= g.exclusion]


def evaluate_grid(columns, thetas, crossing=True) -> List[SweepRecord]:
    """Evaluate ``(name, value_fn, jumps)`` columns on a theta grid.

    When ``crossing`` is set, columns that jump get two one-sided rows at
    ``pi/2`` (``pre`` and ``post``) and the others one row.
    """
    records = []
    for name, value, jumps in columns:
        for th in thetas:
            th = float(th)
            branch = ("pre" if th < HALF_PI else "post") if jumps else "n/a"
            records.append(SweepRecord(th, name, value(th, None), branch))
        if crossing:
            if jumps:
                for side in ("pre", "post"):
                    records.append(SweepRecord(HALF_PI, name, value(HALF_PI, side), side))
            else:
                records.append(SweepRecord(HALF_PI, name, value(HALF_PI, None), "n/a"))
    for r in records:
        if not math.isfinite(r.value):
            raise ArithmeticError(f"non-finite value for {r.measure} at theta = {r.theta}")
    records.sort(key=SweepRecord.sort_key)
    return records


def config_columns(config: RunConfig, rename: Optional[Callable[[str], str]] = None):
    scenario = build_scenario(config)
    return [
        (
            rename(spec.name) if rename else spec.name,
            measure_evaluator(spec, scenario),
            spec.observable in JUMP_OBSERVABLES,
        )
        for spec in config.measures
    ]


def sweep_records(config: RunConfig, rename: Optional[Callable[[str], str]] = None) -> List[SweepRecord]:
    """All records of a sweep, sorted by theta, measure name, branch.

    Grid points inside the exclusion window around ``pi/2`` are dropped;
    the crossing itself is reported through one-sided evaluations when
    ``pi/2`` lies in the grid range.
    """
    config.validate()
    crossing = config.grid.start <= HALF_PI <= config.grid.end
    return evaluate_grid(config_columns(config, rename), theta_grid(config.grid), crossing)


def format_number(x: float) -> str:
    return f"{float(x) + 0.0:.12g}"


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow((format_number(r.theta), r.measure, format_number(r.value), r.branch))
    return buf.getvalue()


def read_csv(text: str) -> List[SweepRecord]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError("not a sweep CSV: bad header")
    return [SweepRecord(float(t), m, float(v), b) for t, m, v, b in rows[1:]]


def write_csv(records, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(records_to_csv(records))
