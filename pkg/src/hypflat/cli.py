"""Command-line entry point.

Exit codes: 0 success, 2 usage or input error, 3 chart-boundary or
singularity, 4 failed ``verify``.
"""

import argparse
import dataclasses
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .curves import BUILTIN_DEFAULTS, classify_curve
from .developable import (
    curvature_fields,
    detect_ideal_cone,
    fundamental_forms,
    generate_surface,
    massey_fit,
    moebius_curve,
    structural_checks,
)
from .errors import ChartBoundaryError, HypflatError, ModelOverflowError, SingularityError
from .geodesics import INFINITY
from .lorentz import MoebiusMap
from .mesh_io import curve_from_spec, project_grid, read_curve_json, report_json, write_channels_csv, write_fields_csv, write_obj
from .structure import run_all
from .tolerances import Tolerances

EXIT_USAGE, EXIT_CHART, EXIT_VERIFY = 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser():
    p = _Parser(prog="hypflat", description="Flat surfaces in hyperbolic 3-space from null curves of oriented geodesics.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("command", choices=["classify", "surface", "analyze", "verify", "examples"])
    p.add_argument("--curve", help="curve-spec JSON file, or the name of a builtin")
    p.add_argument("--ns", type=int, default=256)
    p.add_argument("--nt", type=int, default=128)
    p.add_argument("--s-min", type=float)
    p.add_argument("--s-max", type=float)
    p.add_argument("--t-min", type=float, default=-2.0)
    p.add_argument("--t-max", type=float, default=2.0)
    p.add_argument("--model", choices=["ball", "upper"], default="ball")
    p.add_argument("--tol", type=float, help="null/causal tolerance for classification")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output path (stdout for reports when omitted)")
    p.add_argument("--csv", help="analyze: also dump curvature fields to this CSV")
    p.add_argument("--force", action="store_true", help="surface/analyze: accept non-developable curves")
    for f in dataclasses.fields(Tolerances):
        p.add_argument("--tol-" + f.name.replace("_", "-"), type=float, dest="tol_" + f.name, default=None,
                       help=f"default {f.default:g}")
    return p


@dataclasses.dataclass
class RunConfig:
    command: str
    curve: str
    ns: int
    nt: int
    s_range: tuple
    t_range: tuple
    model: str
    tol: float
    tolerances: Tolerances
    seed: int
    out: str
    csv: str
    force: bool


def _config(args):
    changes = {f.name: getattr(args, "tol_" + f.name) for f in dataclasses.fields(Tolerances)
               if getattr(args, "tol_" + f.name) is not None}
    tols = Tolerances().replace(**changes)
    if args.ns < 8 or args.nt < 8:
        raise _Usage("--ns and --nt must be at least 8")
    if args.tol is not None and not args.tol > 0:
        raise _Usage("--tol must be positive")
    if (args.s_min is None) != (args.s_max is None):
        raise _Usage("--s-min and --s-max go together")
    s_range = None if args.s_min is None else (args.s_min, args.s_max)
    for r in (s_range, (args.t_min, args.t_max)):
        if r is not None and not (np.isfinite(r[0]) and np.isfinite(r[1]) and r[0] < r[1]):
            raise _Usage(f"bad range {r}")
    if args.command in ("classify", "surface", "analyze") and not args.curve:
        raise _Usage(f"{args.command} needs --curve")
    if args.command == "surface" and not args.out:
        raise _Usage("surface needs --out")
    return RunConfig(args.command, args.curve, args.ns, args.nt, s_range, (args.t_min, args.t_max), args.model,
                     args.tol, tols, args.seed, args.out, args.csv, args.force)


class _Usage(Exception):
    pass


def _random_rotation(rng, angle=0.3):
    """A small rotation about a random axis, as an SU(2) element."""
    axis = rng.standard_normal(3)
    axis /= np.linalg.norm(axis)
    th = angle * rng.uniform(0.5, 1.0)
    c, s = np.cos(th / 2), np.sin(th / 2)
    x, y, z = axis * s
    return MoebiusMap.from_matrix([[c + 1j * z, 1j * x + y], [1j * x - y, c - 1j * z]])


def load_curve(cfg, grid=512):
    """The configured curve, conjugated into the chart by small rotations if needed.

    Returns the curve and the rotation used (``None`` when not needed).
    """
    src = cfg.curve
    if Path(src).exists():
        loader = (lambda check=True: read_curve_json(src, grid, check=check))
    elif src in BUILTIN_DEFAULTS:
        loader = (lambda check=True: curve_from_spec({"type": "builtin", "name": src}, grid, check=check))
    else:
        raise _Usage(f"no curve file or builtin named {src!r}")
    try:
        return loader(), None
    except ChartBoundaryError:
        raw = loader(check=False)
    rng = np.random.Generator(np.random.PCG64(cfg.seed))
    err = None
    for _ in range(3):
        a = _random_rotation(rng)
        try:
            return moebius_curve(a, raw), a
        except ChartBoundaryError as e:
            err = e
    raise err


def _vertex_json(v):
    if v is None:
        return None
    if v is INFINITY:
        return "inf"
    return [v.real, v.imag]


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_classify(cfg):
    c, rot = load_curve(cfg)
    rep = classify_curve(c, tol=cfg.tol)
    out = {"curve": c.name, "grid": len(rep.s), **rep.as_dict(), "rotation": _rotation_json(rot)}
    _emit(report_json(out), cfg.out)
    return 0


def _rotation_json(a):
    return None if a is None else [[[z.real, z.imag] for z in row] for row in a.matrix]


def _surface(cfg, c):
    return generate_surface(c, cfg.s_range, cfg.t_range, cfg.ns, cfg.nt, force=cfg.force, tol=cfg.tolerances)


def cmd_surface(cfg):
    c, _ = load_curve(cfg)
    grid = _surface(cfg, c)
    forms = fundamental_forms(grid, tol=cfg.tolerances)
    curv = curvature_fields(grid, forms)
    mesh = project_grid(grid, cfg.model, curv, clip=cfg.tolerances.upper_clip)
    write_obj(mesh, cfg.out)
    write_channels_csv(mesh, str(Path(cfg.out).with_suffix(".csv")))
    print(f"wrote {cfg.out}: {len(mesh.vertices)} vertices, {len(mesh.triangles)} triangles"
          + (f", {int(mesh.clipped.sum())} clipped" if mesh.clipped.any() else ""), file=sys.stderr)
    return 0


def cmd_analyze(cfg):
    c, rot = load_curve(cfg)
    grid = _surface(cfg, c)
    forms = fundamental_forms(grid, tol=cfg.tolerances)
    curv = curvature_fields(grid, forms)
    massey = massey_fit(grid, curv, forms, tol=cfg.tolerances)
    structural = structural_checks(grid, forms, massey)
    causal = classify_curve(c, tol=cfg.tol)
    report = {
        "curve": c.name,
        "verdict": massey.verdict,
        "causal_verdict": causal.verdict,
        "vertex": _vertex_json(detect_ideal_cone(c, causal)),
        "grid": {"ns": cfg.ns, "nt": cfg.nt, "s": [grid.s[0], grid.s[-1]], "t": [grid.t[0], grid.t[-1]]},
        "max_abs_Kext_numeric": float(np.nanmax(np.abs(curv.Kext_numeric))),
        "max_abs_Kext_closed": float(np.nanmax(np.abs(curv.Kext_closed))),
        "max_abs_Kext_ruled": float(np.nanmax(np.abs(curv.Kext_ruled))),
        "max_gauss_residual": float(np.nanmax(np.abs(curv.K - (-1 + curv.Kext_numeric))[curv.interior])),
        "min_Lambda": float(np.min(grid.Lambda)),
        "normal_convention": "nu = f_s x f_t / |f_s x f_t|",
        "massey": massey.as_dict()["rulings"],
        "structural": structural.as_dict(),
        "rotation": _rotation_json(rot),
        "tolerances": cfg.tolerances.as_dict(),
    }
    _emit(report_json(report), cfg.out)
    if cfg.csv:
        write_fields_csv(grid, curv, cfg.csv)
    return 0


def cmd_verify(cfg):
    reports = run_all(cfg.seed)
    out = {"seed": cfg.seed, "passed": all(r.passed for r in reports), "checks": [r.as_dict() for r in reports]}
    _emit(report_json(out), cfg.out)
    return 0 if out["passed"] else EXIT_VERIFY


def cmd_examples(cfg):
    _emit(report_json({"builtins": BUILTIN_DEFAULTS}), cfg.out)
    return 0


COMMANDS = {"classify": cmd_classify, "surface": cmd_surface, "analyze": cmd_analyze,
            "verify": cmd_verify, "examples": cmd_examples}


def run(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        return COMMANDS[cfg.command](cfg)
    except _Usage as e:
        print(f"hypflat: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ChartBoundaryError, SingularityError, ModelOverflowError) as e:
        print(f"hypflat: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_CHART
    except (HypflatError, ValueError) as e:
        print(f"hypflat: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
