"""Command-line front end.

    csgordon --command eval --family A --alpha -1 --beta 0 --format csv
    csgordon --config run.cfg --n 4000

A config file holds one ``key = value`` per line using the long flag names
without dashes (``phi-start = 1.2``); ``#`` starts a comment.  Flags given on
the command line override the file.  Exit codes: 0 success, 2 configuration
error, 3 numerical-domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import pde, solutions, spinchain
from .errors import CFLError, CsgError, KinkNotFoundError, PoleError
from .params import CsgParams, to_phase_form

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN = 0, 2, 3

COMMANDS = ("eval", "residual", "evolve", "normal-form", "limits", "pump")

COLUMNS = {
    "eval": ["x", "t", "u", "family", "phi", "flag"],
    "residual": ["h", "residual_sup", "observed_order"],
    "evolve": ["t", "L_inf_error_vs_analytic", "energy", "kink_center"],
    "normal-form": ["x", "phi", "xi0", "xi0_prime", "mu", "u_direct", "u_normal_form", "abs_diff"],
    "limits": ["check", "parameter", "value", "bound", "passed"],
    "pump": ["phi_prime", "phi", "center_analytic", "center_measured", "transported_spin", "status"],
}


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="csgordon", description=__doc__.split("\n\n")[0],
                 argument_default=argparse.SUPPRESS)
    ap.add_argument("--config", help="key = value config file")
    ap.add_argument("--command", choices=COMMANDS)
    ap.add_argument("--family", help="A, B, C, D (residual also: vacuum, gaussian; evolve: A, vacuum)")
    for name in ("alpha", "beta", "k", "c", "xi0", "xmin", "xmax", "dt", "t",
                 "phi-start", "phi-end", "z0", "r-prime", "eta", "a-lat", "v"):
        ap.add_argument(f"--{name}", type=float)
    for name in ("n", "steps", "schedule-points", "levels", "record-every"):
        ap.add_argument(f"--{name}", type=int)
    ap.add_argument("--format", choices=("csv", "json"))
    ap.add_argument("--out", help="output path, '-' for stdout")
    return ap


DEFAULTS = {
    "command": None, "family": "A", "alpha": -1.0, "beta": 0.0, "k": 1.0, "c": 0.0,
    "xi0": 0.0, "xmin": -20.0, "xmax": 20.0, "n": 2000, "dt": None, "steps": 100, "t": 0.0,
    "phi-start": math.pi / 2, "phi-end": 3 * math.pi / 2, "schedule-points": 10, "z0": 0.0,
    "r-prime": 0.25, "eta": 2.0, "a-lat": 1.0, "v": 1.0, "levels": 3, "record-every": 1,
    "format": "csv", "out": "-",
}
_INT_KEYS = {"n", "steps", "schedule-points", "levels", "record-every"}
_STR_KEYS = {"command", "family", "format", "out"}


def read_config_file(path: str) -> dict:
    values = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("_", "-")
        if key not in DEFAULTS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        values[key] = _convert(key, val, f"{path}:{lineno}")
    return values


def _convert(key, val, where):
    if key in _STR_KEYS:
        return val
    try:
        return int(val) if key in _INT_KEYS else float(val)
    except ValueError:
        raise ConfigError(f"{where}: {key} expects a number, got {val!r}") from None


@dataclass
class RunConfig:
    values: dict

    def __getitem__(self, key):
        return self.values[key]

    @property
    def params(self) -> CsgParams:
        v = self.values
        return CsgParams(v["alpha"], v["beta"], v["k"], v["c"])

    @property
    def grid(self) -> pde.Grid1D:
        return pde.Grid1D(self["xmin"], self["xmax"], self["n"])

    @property
    def chain(self) -> spinchain.SpinChainParams:
        return spinchain.SpinChainParams(J=1.0, R_prime=self["r-prime"], phi_prime=0.0,
                                         a_lat=self["a-lat"], eta=self["eta"], v=self["v"])


_FAMILIES = {
    "eval": {"A", "B", "C", "D"},
    "residual": {"A", "B", "C", "D", "vacuum", "gaussian"},
    "evolve": {"A", "vacuum"},
    "normal-form": {"A"},
    "limits": {"A"},
    "pump": {"A"},
}


def load_config(argv) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    values = dict(DEFAULTS)
    if "config" in ns:
        values.update(read_config_file(ns.pop("config")))
    values.update({k.replace("_", "-"): v for k, v in ns.items()})
    cfg = RunConfig(values)
    validate(cfg)
    return cfg


def validate(cfg: RunConfig) -> None:
    """Check every precondition the command will rely on; raise ConfigError."""
    cmd = cfg["command"]
    if cmd not in COMMANDS:
        raise ConfigError(f"--command must be one of {', '.join(COMMANDS)}")
    if cfg["family"] not in _FAMILIES[cmd]:
        raise ConfigError(f"--family {cfg['family']!r} not valid for {cmd}; "
                          f"choose from {sorted(_FAMILIES[cmd])}")
    if cfg["format"] not in ("csv", "json"):
        raise ConfigError("--format must be csv or json")
    try:
        grid = cfg.grid
        if cmd == "pump":
            cfg.chain
            spinchain.PumpSchedule(cfg["phi-start"], cfg["phi-end"], cfg["schedule-points"])
            return
        p = cfg.params.validate()
        if cmd == "limits":
            return
        pf = to_phase_form(p)
        if cfg["family"] in ("A", "B", "C", "D") and pf.phi == 0.0:
            raise ConfigError("phi = 0 (beta = 0, alpha > 0): the closed-form families "
                              "degenerate; use --command limits")
        if cmd == "residual" and cfg["levels"] < 2:
            raise ConfigError("--levels must be >= 2")
        if cmd == "evolve":
            if cfg["steps"] < 1:
                raise ConfigError("--steps must be >= 1")
            if cfg["record-every"] < 0:
                raise ConfigError("--record-every must be >= 0")
            dt = cfg["dt"] if cfg["dt"] is not None else pde.cfl_dt(grid, p)[0]
            cfg.values["dt"] = dt
            pde.EvolveConfig(dt, cfg["steps"], p).check_cfl(grid)
    except CFLError as exc:
        raise ConfigError(f"CFL violation: {exc}") from None
    except CsgError as exc:
        raise ConfigError(str(exc)) from None


# -- commands --------------------------------------------------------------

def cmd_eval(cfg: RunConfig) -> list[dict]:
    spec = solutions.SolutionSpec(cfg["family"], cfg.params, cfg["xi0"])
    grid = cfg.grid
    x = grid.x
    t = cfg["t"]
    u = solutions.evaluate(spec, x, t)
    phi = spec.phase.phi
    flags = [""] * x.size
    if spec.family.singular:
        z = x - spec.params.c * t + spec.xi0
        for i, zi in enumerate(z):
            if zi == 0.0:
                flags[i] = "pole_limit"
            elif abs(zi) < 5.0 * grid.dx:
                flags[i] = "near_pole"
    return [dict(x=float(xi), t=t, u=float(ui), family=spec.family.value, phi=phi, flag=f)
            for xi, ui, f in zip(x, u, flags)]


def _residual_target(cfg: RunConfig):
    p = cfg.params
    fam = cfg["family"]
    if fam == "vacuum":
        phi = to_phase_form(p).phi
        return (lambda xi: np.full_like(xi, -phi)), p
    if fam == "gaussian":
        return (lambda xi: np.exp(-xi * xi)), p
    return solutions.SolutionSpec(fam, p, cfg["xi0"]), p


def cmd_residual(cfg: RunConfig) -> list[dict]:
    target, p = _residual_target(cfg)
    grid = cfg.grid
    xi = grid.x
    h0 = grid.dx
    if isinstance(target, solutions.SolutionSpec) and target.family.singular:
        xi = xi[np.abs(xi + target.xi0) >= 5.0 * h0]
        if xi.size == 0:
            raise PoleError("every grid point lies within 5 cells of the coth pole")
    hs = [h0 / 2 ** i for i in range(cfg["levels"])]
    res = [pde.residual_ode(target, xi, h, params=p) for h in hs]
    orders = [math.nan] + pde.observed_orders(hs, res)
    return [dict(h=h, residual_sup=r, observed_order=o) for h, r, o in zip(hs, res, orders)]


def cmd_evolve(cfg: RunConfig) -> list[dict]:
    p = cfg.params
    grid = cfg.grid
    evo = pde.EvolveConfig(cfg["dt"], cfg["steps"], p)
    phi = to_phase_form(p).phi
    x = grid.x
    inner = slice(1, -1)
    if cfg["family"] == "vacuum":
        state = pde.vacuum_state(phi, grid)

        def exact(t):
            return np.full_like(x, -phi)
    else:
        spec = solutions.SolutionSpec("A", p, cfg["xi0"])
        state = pde.kink_state(spec, grid)

        def exact(t):
            return solutions.evaluate(spec, x, t)
    rows = []
    for _, st in pde.evolve(state, evo, grid, cfg["record-every"]):
        err = float(np.max(np.abs(st.u[inner] - exact(st.t)[inner])))
        try:
            center = pde.kink_center(st, phi, grid)
        except KinkNotFoundError:
            center = math.nan
        rows.append(dict(t=st.t, L_inf_error_vs_analytic=err,
                         energy=pde.energy(st, p, grid), kink_center=center))
    return rows


def cmd_normal_form(cfg: RunConfig) -> list[dict]:
    spec = solutions.SolutionSpec("A", cfg.params, cfg["xi0"])
    nf = solutions.normal_form(spec)
    x = cfg.grid.x
    t = cfg["t"]
    direct = solutions.evaluate(spec, x, t)
    nform = solutions.normal_form_profile(nf, x - spec.params.c * t)
    return [dict(x=float(xi), phi=nf.phi, xi0=spec.xi0, xi0_prime=nf.xi0_prime, mu=nf.mu,
                 u_direct=float(d), u_normal_form=float(q), abs_diff=float(abs(d - q)))
            for xi, d, q in zip(x, direct, nform)]


def cmd_limits(cfg: RunConfig) -> list[dict]:
    p = cfg.params
    rows = []
    for xs in (1e-4, 1e-6, 1e-8):
        lhs, rhs = solutions.lemma1_check(xs)
        gap = abs(lhs - rhs)
        rows.append(dict(check="lemma1_gap", parameter=xs, value=gap, bound=xs, passed=gap < xs))
    xi = np.linspace(-10.0, 10.0, 1001)
    d1 = solutions.case1_check(p.R, p.s, xi, cfg["xi0"])
    rows.append(dict(check="case1_alpha_axis", parameter=p.R, value=d1, bound=1e-12,
                     passed=d1 < 1e-12))
    base = solutions.SolutionSpec("A", CsgParams(p.R, 1.0, p.k, p.c), cfg["xi0"])
    prev = math.inf
    for beta in (1e-3, 1e-4, 1e-6):
        d2 = solutions.limit_beta_zero(base, beta)
        rows.append(dict(check="case2_beta_to_zero", parameter=beta, value=d2, bound=prev,
                         passed=d2 < prev))
        prev = d2
    return rows


def cmd_pump(cfg: RunConfig) -> list[dict]:
    sched = spinchain.PumpSchedule(cfg["phi-start"], cfg["phi-end"], cfg["schedule-points"])
    return spinchain.pump_rows(sched, cfg.grid, cfg.chain, cfg["xi0"], cfg["z0"])


RUNNERS = {
    "eval": cmd_eval,
    "residual": cmd_residual,
    "evolve": cmd_evolve,
    "normal-form": cmd_normal_form,
    "limits": cmd_limits,
    "pump": cmd_pump,
}


# -- output ----------------------------------------------------------------

def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def render(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        data = [{c: _jsonable(r[c]) for c in columns} for r in rows]
        return json.dumps(data, indent=1) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_fmt(r[c]) for c in columns])
    return buf.getvalue()


def run(cfg: RunConfig) -> str:
    cmd = cfg["command"]
    return render(RUNNERS[cmd](cfg), COLUMNS[cmd], cfg["format"])


def main(argv=None) -> int:
    try:
        cfg = load_config(sys.argv[1:] if argv is None else argv)
    except ConfigError as exc:
        print(f"csgordon: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        text = run(cfg)
    except CsgError as exc:
        print(f"csgordon: numerical-domain error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if cfg["out"] == "-":
        sys.stdout.write(text)
    else:
        with open(cfg["out"], "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
