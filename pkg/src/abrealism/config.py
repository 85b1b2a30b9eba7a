"""Run configuration files for ``abrealism sweep``.

The format is INI-style (``configparser``)::

    [scenario]
    kind = classical-ab          ; standard | classical-ab | quantized-ab
    f = linear 1/3               ; zero | linear <slope> | tabulated t0:v0, t1:v1, ...
    phi_ab = pi/5
    gauge_cos = 0.3, -0.1        ; optional Fourier coefficients of the gauge phase
    gauge_sin =

    [grid]
    start = 0
    end = pi
    count = 1001
    exclusion = 1e-9

    [measure sigma_xA]
    observable = sigma_gA        ; see OBSERVABLES
    g = f
    delta = 0
    base = 2
    normalization_dim = 2

    [output]
    csv = out.csv

Quantized scenarios use ``ell``, ``qK`` and ``populated`` (indices of an
even superposition) instead of ``phi_ab``/gauge. Real-valued keys accept
arithmetic on numbers and ``pi``, e.g. ``2*pi/25``.
"""

import ast
import configparser
import math
import operator
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .classical import GaugeChoice, PhaseProfile

KINDS = ("standard", "classical-ab", "quantized-ab")

CLASSICAL_OBSERVABLES = ("sigma_z", "sigma_g", "sigma_gA")
QUANTIZED_OBSERVABLES = (
    "sigma_z_reduced",
    "sigma_g_reduced",
    "branch",
    "Sigma_x",
    "Sigma_y",
    "sigma_z_joint",
)
JOINT_OBSERVABLES = ("Sigma_x", "Sigma_y", "sigma_z_joint")


class ConfigError(ValueError):
    """Invalid or unresolvable run configuration."""


_OPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}


def parse_real(text) -> float:
    """Evaluate a real literal such as ``0.2``, ``pi/5`` or ``-2*pi/25``."""
    if isinstance(text, (int, float)):
        return float(text)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        raise ConfigError(f"cannot parse real value {text!r}")

    try:
        value = ev(ast.parse(str(text).strip(), mode="eval"))
    except (SyntaxError, ZeroDivisionError) as exc:
        raise ConfigError(f"cannot parse real value {text!r}") from exc
    if not math.isfinite(value):
        raise ConfigError(f"real value {text!r} is not finite")
    return value


def parse_real_list(text) -> Tuple[float, ...]:
    text = (text or "").strip()
    if not text:
        return ()
    return tuple(parse_real(part) for part in text.split(","))


def parse_profile(text) -> PhaseProfile:
    words = str(text).strip().split(None, 1)
    if not words:
        raise ConfigError("empty phase profile")
    kind = words[0]
    try:
        if kind == "zero" and len(words) == 1:
            return PhaseProfile.zero()
        if kind == "linear" and len(words) == 2:
            return PhaseProfile.linear(parse_real(words[1]))
        if kind == "tabulated" and len(words) == 2:
            pairs = [p.split(":") for p in words[1].split(",")]
            if any(len(p) != 2 for p in pairs):
                raise ConfigError(f"tabulated profile entries must be t:value, got {text!r}")
            return PhaseProfile.tabulated(
                [parse_real(t) for t, _ in pairs], [parse_real(v) for _, v in pairs]
            )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    raise ConfigError(f"cannot parse phase profile {text!r}")


def format_real(x: float) -> str:
    return repr(float(x))


def format_profile(p: PhaseProfile) -> str:
    if p.kind == "zero":
        return "zero"
    if p.kind == "linear":
        return f"linear {format_real(p.slope)}"
    pairs = ", ".join(f"{format_real(t)}:{format_real(v)}" for t, v in zip(p.grid, p.values))
    return f"tabulated {pairs}"


@dataclass(frozen=True)
class GridSpec:
    start: float = 0.0
    end: float = math.pi
    count: int = 1001
    exclusion: float = 1e-9

    def validate(self):
        if self.count < 2:
            raise ConfigError(f"grid count must be at least 2, got {self.count}")
        if not 0.0 <= self.start < self.end <= math.pi:
            raise ConfigError(
                f"grid must satisfy 0 <= start < end <= pi, got [{self.start}, {self.end}]"
            )
        if self.exclusion < 0:
            raise ConfigError("grid exclusion half-width must be non-negative")


@dataclass(frozen=True)
class MeasureSpec:
    """One measure column: an observable recipe plus the realism convention.

    ``g`` is either ``"f"`` (track the scenario's phase profile) or a
    :class:`PhaseProfile`; ``m`` selects the cylinder branch for
    ``observable = branch``.
    """

    name: str
    observable: str
    g: object = "f"
    delta: float = 0.0
    m: int = 0
    base: Optional[float] = None
    normalization_dim: Optional[int] = None


@dataclass(frozen=True)
class RunConfig:
    kind: str
    f: PhaseProfile = field(default_factory=PhaseProfile.zero)
    phi_ab: float = 0.0
    gauge: GaugeChoice = field(default_factory=GaugeChoice)
    ell: int = 0
    qK: float = 0.0
    populated: Tuple[int, ...] = ()
    grid: GridSpec = field(default_factory=GridSpec)
    measures: Tuple[MeasureSpec, ...] = ()
    csv: Optional[str] = None

    def validate(self) -> "RunConfig":
        if self.kind not in KINDS:
            raise ConfigError(f"unknown scenario kind {self.kind!r}; expected one of {KINDS}")
        self.grid.validate()
        if not self.measures:
            raise ConfigError("configuration lists no measures")
        allowed = QUANTIZED_OBSERVABLES if self.kind == "quantized-ab" else CLASSICAL_OBSERVABLES
        names = set()
        for m in self.measures:
            if m.observable not in allowed:
                raise ConfigError(
                    f"measure {m.name!r}: observable {m.observable!r} is not available "
                    f"for kind {self.kind!r} (choose from {', '.join(allowed)})"
                )
            if m.name in names:
                raise ConfigError(f"duplicate measure name {m.name!r}")
            names.add(m.name)
            if m.base is not None and not m.base > 1:
                raise ConfigError(f"measure {m.name!r}: base must exceed 1")
            if m.normalization_dim is not None and m.normalization_dim < 2:
                raise ConfigError(f"measure {m.name!r}: normalization_dim must be >= 2")
        if self.kind == "standard" and (self.phi_ab != 0.0 or not self.gauge.is_zero):
            raise ConfigError("standard interferometer takes no flux or gauge")
        if self.kind == "quantized-ab":
            if self.ell < 0:
                raise ConfigError("ell must be non-negative")
            if not self.populated:
                raise ConfigError("quantized-ab needs at least one populated index")
            if any(abs(m) > self.ell for m in self.populated):
                raise ConfigError(f"populated indices {self.populated} exceed ell = {self.ell}")
            for m in self.measures:
                if m.observable == "branch" and abs(m.m) > self.ell:
                    raise ConfigError(f"measure {m.name!r}: branch m = {m.m} exceeds ell")
        return self

    def to_text(self) -> str:
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        sc = {"kind": self.kind, "f": format_profile(self.f)}
        if self.kind == "quantized-ab":
            sc["ell"] = str(self.ell)
            sc["qK"] = format_real(self.qK)
            sc["populated"] = ", ".join(str(m) for m in self.populated)
        else:
            sc["phi_ab"] = format_real(self.phi_ab)
            sc["gauge_cos"] = ", ".join(format_real(a) for a in self.gauge.fourier_cos)
            sc["gauge_sin"] = ", ".join(format_real(b) for b in self.gauge.fourier_sin)
        cp["scenario"] = sc
        cp["grid"] = {
            "start": format_real(self.grid.start),
            "end": format_real(self.grid.end),
            "count": str(self.grid.count),
            "exclusion": format_real(self.grid.exclusion),
        }
        for m in self.measures:
            sec = {"observable": m.observable}
            sec["g"] = m.g if m.g == "f" else format_profile(m.g)
            sec["delta"] = format_real(m.delta)
            if m.observable == "branch":
                sec["m"] = str(m.m)
            if m.base is not None:
                sec["base"] = format_real(m.base)
            if m.normalization_dim is not None:
                sec["normalization_dim"] = str(m.normalization_dim)
            cp[f"measure {m.name}"] = sec
        if self.csv is not None:
            cp["output"] = {"csv": self.csv}
        lines = []
        for section in cp.sections():
            lines.append(f"[{section}]")
            lines.extend(f"{k} = {v}".rstrip() for k, v in cp[section].items())
            lines.append("")
        return "\n".join(lines)


def _int(text, what) -> int:
    try:
        return int(str(text).strip())
    except ValueError as exc:
        raise ConfigError(f"{what} must be an integer, got {text!r}") from exc


def parse_config(text: str) -> RunConfig:
    cp = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=(";", "#"))
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed configuration: {exc}") from exc
    if "scenario" not in cp:
        raise ConfigError("missing [scenario] section")
    sc = cp["scenario"]
    kind = sc.get("kind", "").strip()
    kwargs = {"kind": kind, "f": parse_profile(sc.get("f", "zero"))}
    if kind == "quantized-ab":
        kwargs["ell"] = _int(sc.get("ell", "0"), "ell")
        kwargs["qK"] = parse_real(sc.get("qK", "0"))
        kwargs["populated"] = tuple(
            _int(p, "populated index") for p in sc.get("populated", "").split(",") if p.strip()
        )
    else:
        kwargs["phi_ab"] = parse_real(sc.get("phi_ab", "0"))
        kwargs["gauge"] = GaugeChoice(
            parse_real_list(sc.get("gauge_cos", "")), parse_real_list(sc.get("gauge_sin", ""))
        )
    if "grid" in cp:
        g = cp["grid"]
        kwargs["grid"] = GridSpec(
            parse_real(g.get("start", "0")),
            parse_real(g.get("end", "pi")),
            _int(g.get("count", "1001"), "grid count"),
            parse_real(g.get("exclusion", "1e-9")),
        )
    measures = []
    for section in cp.sections():
        if not section.startswith("measure"):
            continue
        name = section[len("measure"):].strip()
        if not name:
            raise ConfigError("measure sections need a name: [measure <name>]")
        s = cp[section]
        g_text = s.get("g", "f").strip()
        measures.append(
            MeasureSpec(
                name=name,
                observable=s.get("observable", "").strip(),
                g="f" if g_text == "f" else parse_profile(g_text),
                delta=parse_real(s.get("delta", "0")),
                m=_int(s.get("m", "0"), "branch index m"),
                base=parse_real(s["base"]) if "base" in s else None,
                normalization_dim=_int(s["normalization_dim"], "normalization_dim")
                if "normalization_dim" in s
                else None,
            )
        )
    kwargs["measures"] = tuple(measures)
    if "output" in cp and "csv" in cp["output"]:
        kwargs["csv"] = cp["output"]["csv"].strip()
    return RunConfig(**kwargs).validate()


def load_config(path) -> RunConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
