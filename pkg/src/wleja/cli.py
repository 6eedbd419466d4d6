"""Command-line front end.

    wleja generate --alpha 2 --n-max 200 --out runs/a2
    wleja lebesgue --alpha 2 --n-list 10,20,50,100,200 --format csv,json,svg
    wleja report --config run.cfg --out runs/a2

A config file holds flat ``key = value`` lines using the long flag names
(dashes or underscores); command-line flags override it.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .errors import NumericalError, WlejaError
from .interp import DEFAULT_LEBESGUE_PROBES, interpolation_error_study, lebesgue_constant
from .leja import DEFAULT_MARGIN, DEFAULT_PROBES, SolverSettings, contract, empirical_measure, generate_sequence
from .potential import (
    DEFAULT_DELTAS,
    cdf_distance,
    denominator_value,
    equilibrium_measure,
    fekete_functional,
    numerator_limit,
    split_products,
)
from .spacing import DEFAULT_BERNSTEIN_GRID, spacing_report
from .svg import line_plot_svg
from .weights import FreudWeight, mrs_number

log = logging.getLogger("wleja")

EXIT_OK, EXIT_VALIDATION, EXIT_NUMERICAL = 0, 2, 3
DEFAULT_N_LIST = (10, 20, 50, 100, 200)
FORMATS = ("csv", "json", "svg")

TEST_FUNCTIONS = {
    "runge": lambda x: 1.0 / (1.0 + x**2),
    "constant": lambda x: np.ones_like(x),
    "cubic": lambda x: x**3,
    "abs": lambda x: np.abs(x),
}


class ValidationError(WlejaError, ValueError):
    pass


@dataclass
class RunConfig:
    alpha: float = 2.0
    n_max: int = 200
    n_list: list[int] = field(default_factory=list)
    x0: float = 0.0
    margin: float = DEFAULT_MARGIN
    leja_probes: int = DEFAULT_PROBES
    grid: int = DEFAULT_LEBESGUE_PROBES
    bernstein_grid: int = DEFAULT_BERNSTEIN_GRID
    delta_list: list[float] = field(default_factory=lambda: list(DEFAULT_DELTAS))
    output_dir: str = "."
    formats: list[str] = field(default_factory=lambda: ["csv", "json"])
    function: str = "runge"

    def validate(self):
        if not math.isfinite(self.alpha) or self.alpha <= 1:
            raise ValidationError("alpha must exceed 1")
        if self.n_max < 1:
            raise ValidationError("n_max must be at least 1")
        if not 0 < self.margin <= 0.5:
            raise ValidationError("margin must lie in (0, 0.5]")
        if not self.n_list:
            self.n_list = sorted({n for n in DEFAULT_N_LIST if n <= self.n_max} | {self.n_max})
        bad = [n for n in self.n_list if n < 0 or n > self.n_max]
        if bad:
            raise ValidationError(f"n_list entries must lie in 0..n_max={self.n_max}: {bad}")
        if any(d <= 0 for d in self.delta_list):
            raise ValidationError("deltas must be positive")
        if self.grid < 4:
            raise ValidationError("grid must be at least 4 probes per interval")
        if self.leja_probes < 4:
            raise ValidationError("leja probes must be at least 4")
        unknown = set(self.formats) - set(FORMATS)
        if unknown:
            raise ValidationError(f"unknown formats {sorted(unknown)}; choose from {FORMATS}")
        if self.function not in TEST_FUNCTIONS:
            raise ValidationError(f"unknown function {self.function!r}; choose from {sorted(TEST_FUNCTIONS)}")
        if not math.isfinite(self.x0):
            raise ValidationError("x0 must be finite")
        return self

    @property
    def settings(self):
        return SolverSettings(margin=self.margin, probes=self.leja_probes)


def _ints(text):
    try:
        return [int(v) for v in str(text).replace(" ", "").split(",") if v]
    except ValueError as exc:
        raise ValidationError(f"bad integer list {text!r}") from exc


def _floats(text):
    try:
        return [float(v) for v in str(text).replace(" ", "").split(",") if v]
    except ValueError as exc:
        raise ValidationError(f"bad number list {text!r}") from exc


_CONVERTERS = {
    "alpha": ("alpha", float),
    "n_max": ("n_max", int),
    "n": ("n_max", int),
    "n_list": ("n_list", _ints),
    "x0": ("x0", float),
    "margin": ("margin", float),
    "leja_probes": ("leja_probes", int),
    "grid": ("grid", int),
    "bernstein_grid": ("bernstein_grid", int),
    "deltas": ("delta_list", _floats),
    "out": ("output_dir", str),
    "format": ("formats", lambda s: [v for v in str(s).replace(" ", "").split(",") if v]),
    "function": ("function", str),
}


def read_config_file(path) -> dict:
    """Parse flat ``key = value`` text; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValidationError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in _CONVERTERS:
            raise ValidationError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def build_config(args) -> RunConfig:
    raw = read_config_file(args.config) if args.config else {}
    for key in _CONVERTERS:
        val = getattr(args, key, None)
        if val is not None:
            raw[key] = val
    cfg = RunConfig()
    for key, val in raw.items():
        attr, conv = _CONVERTERS[key]
        try:
            setattr(cfg, attr, conv(val))
        except ValueError as exc:
            raise ValidationError(f"bad value for {key}: {val!r}") from exc
    return cfg.validate()


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def write_csv(path: Path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if v is None else _fmt(v) for v in row])


def write_json(path: Path, obj):
    def default(o):
        if isinstance(o, np.generic):
            return o.item()
        if isinstance(o, np.ndarray):
            return o.tolist()
        raise TypeError(type(o).__name__)

    text = json.dumps(_finite(obj), indent=2, sort_keys=True, default=default)
    path.write_text(text + "\n")


def _finite(obj):
    # JSON has no NaN/inf
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj


def _settings_dict(cfg: RunConfig):
    d = asdict(cfg)
    d["version"] = __version__
    d["tie_break"] = "largest coordinate among maximisers within relative 1e-12"
    d["leja_rel_xtol"] = cfg.settings.rel_xtol
    return d


class Experiment:
    """Shared state for one configuration; the Leja sequence is generated once."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.fw = FreudWeight(cfg.alpha)
        self._seq = None

    @property
    def seq(self):
        if self._seq is None:
            log.info("generating %d weighted Leja points (alpha=%g)", self.cfg.n_max + 1, self.cfg.alpha)
            self._seq = generate_sequence(self.fw, self.cfg.n_max, self.cfg.x0, self.cfg.settings)
        return self._seq

    def node_rows(self):
        seq = self.seq
        extra = [n for n in self.cfg.n_list if 1 <= n < self.cfg.n_max]
        full = contract(seq, self.cfg.n_max).nodes
        partial = {n: contract(seq, n).nodes for n in extra}
        header = ["index", "point", "contracted_point", "log_objective"] + [f"contracted_n{n}" for n in extra]
        rows = []
        for j in range(seq.n + 1):
            row = [j, seq.points[j], full[j], seq.objective_values[j]]
            row += [partial[n][j] if j <= n else None for n in extra]
            rows.append(row)
        return header, rows

    def lebesgue_rows(self):
        rows = []
        for n in self.cfg.n_list:
            rep = lebesgue_constant(self.seq, self.fw, n, probes=self.cfg.grid, margin=self.cfg.margin)
            rows.append({"n": n, "lebesgue_constant": rep.constant, "nth_root": rep.nth_root,
                         "argmax": rep.argmax_location, "guard_max": rep.guard_max, "grid_size": rep.grid_size})
        return rows

    def potential_summary(self):
        eq = equilibrium_measure(self.fw.alpha)
        rows, per_n = [], []
        for n in self.cfg.n_list:
            if n < 1:
                continue
            nodes = contract(self.seq, n)
            dens, nums = [], []
            for k in range(n + 1):
                num = numerator_limit(nodes, self.fw, k)
                den = denominator_value(nodes, self.fw, k)
                nums.append(num)
                dens.append(den)
                for delta in self.cfg.delta_list:
                    a1, a2 = split_products(nodes, self.fw, k, delta)
                    rows.append({"n": n, "k": k, "numerator_root": num, "denominator_root": den,
                                 "A1_root": a1, "A2_root": a2, "delta": delta, "partition_ratio": a1 * a2 / den})
            target = math.exp(-eq.robin_constant)
            per_n.append({
                "n": n,
                "fekete_functional": fekete_functional(nodes.nodes, self.fw),
                "cdf_distance": cdf_distance(empirical_measure(nodes), eq),
                "max_numerator_deviation": max(abs(v - target) for v in nums),
                "max_denominator_deviation": max(abs(v - target) for v in dens),
            })
        return {
            "alpha": self.fw.alpha,
            "c": eq.support_radius,
            "F_w": eq.robin_constant,
            "V_w": eq.energy,
            "exp_minus_F_w": math.exp(-eq.robin_constant),
            "exp_minus_V_w": math.exp(-eq.energy),
            "per_n": per_n,
            "rows": rows,
        }

    def spacing_rows(self):
        rows = []
        for n in self.cfg.n_list:
            if n < 1:
                continue
            rep = spacing_report(self.seq, n, self.cfg.bernstein_grid)
            rows.append(asdict(rep))
        return rows

    def interp_rows(self):
        f = TEST_FUNCTIONS[self.cfg.function]
        ns = [n for n in self.cfg.n_list if n >= 1]
        res = interpolation_error_study(self.fw, f, ns, seq=self.seq, margin=self.cfg.margin)
        return [{"n": n, "weighted_sup_error": e} for n, e in res]

    def fw_table(self):
        ns = sorted(set(self.cfg.n_list) - {0})
        return {"alpha": self.fw.alpha, "c": self.fw.support_radius_c,
                "a_n": {str(n): mrs_number(self.fw, n) for n in ns}}


def _outdir(cfg) -> Path:
    out = Path(cfg.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write_test"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise ValidationError(f"output directory {out} is not writable: {exc}") from exc
    return out


def _write_table(out, stem, rows, keys, cfg, extra_json=None):
    if "csv" in cfg.formats:
        write_csv(out / f"{stem}.csv", keys, [[r[k] for k in keys] for r in rows])
    if "json" in cfg.formats:
        payload = {"settings": _settings_dict(cfg), "rows": rows}
        if extra_json:
            payload.update(extra_json)
        write_json(out / f"{stem}.json", payload)


def cmd_generate(cfg: RunConfig, exp: Experiment):
    out = _outdir(cfg)
    header, rows = exp.node_rows()
    write_csv(out / "nodes.csv", header, rows)
    write_json(out / "manifest.json", {"settings": _settings_dict(cfg), "fw": exp.fw_table(), "rows": len(rows)})
    return {"nodes": len(rows)}


def cmd_lebesgue(cfg: RunConfig, exp: Experiment):
    out = _outdir(cfg)
    rows = exp.lebesgue_rows()
    _write_table(out, "lebesgue", rows, ["n", "lebesgue_constant", "nth_root", "argmax"], cfg)
    if "svg" in cfg.formats:
        ns = [r["n"] for r in rows]
        svg = line_plot_svg(
            [("L_n", ns, [r["lebesgue_constant"] for r in rows]),
             ("L_n^(1/n)", ns, [r["nth_root"] for r in rows])],
            title=f"Weighted Leja Lebesgue constants, alpha={cfg.alpha:g}",
            xlabel="n",
        )
        (out / "lebesgue.svg").write_text(svg)
    return rows


def cmd_potential(cfg: RunConfig, exp: Experiment):
    out = _outdir(cfg)
    summary = exp.potential_summary()
    keys = ["n", "k", "numerator_root", "denominator_root", "A1_root", "A2_root", "delta", "partition_ratio"]
    if "csv" in cfg.formats:
        write_csv(out / "potential.csv", keys, [[r[k] for k in keys] for r in summary["rows"]])
        per_keys = ["n", "fekete_functional", "cdf_distance", "max_numerator_deviation", "max_denominator_deviation"]
        write_csv(out / "potential_summary.csv", per_keys, [[r[k] for k in per_keys] for r in summary["per_n"]])
    if "json" in cfg.formats:
        write_json(out / "potential.json", {"settings": _settings_dict(cfg), **summary})
    return summary


def cmd_spacing(cfg: RunConfig, exp: Experiment):
    out = _outdir(cfg)
    rows = exp.spacing_rows()
    _write_table(out, "spacing", rows, ["n", "min_scaled_gap", "new_point_gap", "bernstein_sup_ratio"], cfg)
    return rows


def cmd_interp(cfg: RunConfig, exp: Experiment):
    out = _outdir(cfg)
    rows = exp.interp_rows()
    _write_table(out, "interp", rows, ["n", "weighted_sup_error"], cfg, {"function": cfg.function})
    return rows


def cmd_report(cfg: RunConfig, exp: Experiment):
    out = _outdir(cfg)
    cmd_generate(cfg, exp)
    lebesgue = cmd_lebesgue(cfg, exp)
    potential = cmd_potential(cfg, exp)
    spacing = cmd_spacing(cfg, exp)
    interp = cmd_interp(cfg, exp)
    summary = {
        "config": _settings_dict(cfg),
        "fw": exp.fw_table(),
        "lebesgue": lebesgue,
        "potential": {k: potential[k] for k in ("F_w", "V_w", "c", "exp_minus_F_w", "exp_minus_V_w", "per_n", "rows")},
        "spacing": spacing,
        "interp": interp,
    }
    write_json(out / "summary.json", summary)
    return summary


COMMANDS = {
    "generate": cmd_generate,
    "lebesgue": cmd_lebesgue,
    "potential": cmd_potential,
    "spacing": cmd_spacing,
    "interp": cmd_interp,
    "report": cmd_report,
}


def make_parser():
    parser = argparse.ArgumentParser(prog="wleja", description="Weighted Leja sequences for Freud weights.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="flat key=value config file")
        p.add_argument("--alpha", type=float)
        p.add_argument("--n-max", "--n", dest="n_max", type=int)
        p.add_argument("--n-list", dest="n_list", help="comma separated, e.g. 10,20,50")
        p.add_argument("--x0", type=float)
        p.add_argument("--margin", type=float)
        p.add_argument("--leja-probes", dest="leja_probes", type=int)
        p.add_argument("--grid", type=int, help="Lebesgue probes per inter-node interval")
        p.add_argument("--bernstein-grid", dest="bernstein_grid", type=int)
        p.add_argument("--deltas", help="comma separated split radii")
        p.add_argument("--out", help="output directory")
        p.add_argument("--format", help="comma separated subset of csv,json,svg")
        p.add_argument("--function", help=f"test function for interp: {','.join(sorted(TEST_FUNCTIONS))}")
        p.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = build_config(args)
        COMMANDS[args.command](cfg, Experiment(cfg))
    except (ValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except WlejaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
