"""Command-line front end.

Exit codes: 0 the checked assertion holds, 1 it fails, 2 usage or input
error, 3 numerical degeneracy (vanishing denominator or weight).

Examples::

    gftkit phi --lambda 1 --mu 0 --eta 1 -N 5
    gftkit extremal --eta 0 --k 0 --gamma 0 --t-re 0 --n 2 > f.json
    gftkit check f.json --eta 0 --k 0 --gamma 0 --t-re 0
    gftkit verify f.json --t-re 0 --format csv > grid.csv
    gftkit neighborhood f.json --alpha 0.25 --trials 50 --seed 7 --t-re 0
    gftkit partial-sums f.json --m 2 --t-re 0
    gftkit classify-conic --k 0.5 --gamma 0.1
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import conic, kernel, neighborhood, partial_sums, verifier
from .diffop import phi
from .errors import GFTError, NumericalDegeneracy
from .jsonout import dumps
from .series import load_series, series_to_dict

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


def _param_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("class parameters")
    g.add_argument("--lambda", dest="lam", type=float, default=1.0)
    g.add_argument("--mu", type=float, default=0.0)
    g.add_argument("--eta", type=int, default=0)
    g.add_argument("--k", type=float, default=0.0)
    g.add_argument("--gamma", type=float, default=0.0)
    g.add_argument("--t-re", type=float, default=-1.0)
    g.add_argument("--t-im", type=float, default=0.0)
    return p


def _grid_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("grid")
    g.add_argument("--r-max", type=float, default=verifier.DEFAULT_R_MAX)
    g.add_argument("--r-count", type=int, default=verifier.DEFAULT_R_COUNT)
    g.add_argument("--theta-count", type=int, default=verifier.DEFAULT_THETA_COUNT)
    g.add_argument("--ray", type=float, action="append", default=[],
                   help="extra argument (radians) to include in the grid")
    return p


def build_parser() -> argparse.ArgumentParser:
    params, grid = _param_parser(), _grid_parser()
    parser = argparse.ArgumentParser(prog="gftkit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("phi", parents=[params], help="operator multipliers for n = 1..N")
    s.add_argument("-N", type=int, default=10)

    s = sub.add_parser("check", parents=[params], help="coefficient membership test")
    s.add_argument("series", type=Path)

    s = sub.add_parser("verify", parents=[params, grid], help="grid minimum of the defining condition")
    s.add_argument("series", type=Path)
    s.add_argument("--format", choices=("json", "csv"), default="json")

    s = sub.add_parser("extremal", parents=[params], help="extremal function as series JSON")
    which = s.add_mutually_exclusive_group(required=True)
    which.add_argument("--n", type=int)
    which.add_argument("--partial-m", type=int)
    s.add_argument("--order", type=int)

    s = sub.add_parser("neighborhood", parents=[params, grid],
                       help="neighborhood distance or sampled inclusion check")
    s.add_argument("f", type=Path)
    s.add_argument("g", type=Path, nargs="?")
    s.add_argument("--alpha", type=float, required=True)
    s.add_argument("--trials", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--rings", type=int, default=8)
    s.add_argument("--args", type=int, default=16)

    s = sub.add_parser("partial-sums", parents=[params, grid], help="partial-sum ratio bounds")
    s.add_argument("f", type=Path)
    s.add_argument("--m", type=int, required=True)

    s = sub.add_parser("classify-conic", help="type of the conic domain")
    s.add_argument("--k", type=float, required=True)
    s.add_argument("--gamma", type=float, default=0.0)
    return parser


def _class_params(a) -> kernel.ClassParams:
    return kernel.ClassParams.make(a.lam, a.mu, a.eta, a.k, a.gamma, complex(a.t_re, a.t_im))


def _grid(a, extra_rays=()) -> verifier.GridSpec:
    return verifier.GridSpec.default(a.r_max, a.r_count, a.theta_count,
                                     tuple(a.ray) + tuple(extra_rays))


def _read(path: Path):
    try:
        return load_series(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


class UsageError(Exception):
    pass


def cmd_phi(a, out):
    from .diffop import OperatorParams

    if a.N < 1:
        raise UsageError("-N must be >= 1")
    op = OperatorParams(a.lam, a.mu, a.eta)
    values = [phi(op, n) for n in range(1, a.N + 1)]
    out.write(dumps({"lambda": op.lam, "mu": op.mu, "eta": op.eta, "phi": values}) + "\n")
    return EXIT_OK


def cmd_check(a, out):
    p = _class_params(a)
    verdict = kernel.is_member(p, _read(a.series))
    out.write(dumps(verdict.to_dict()) + "\n")
    return EXIT_OK if verdict.member else EXIT_FAIL


def cmd_verify(a, out):
    p = _class_params(a)
    f = _read(a.series)
    grid = _grid(a)
    if a.format == "csv":
        verifier.dump_condition_csv(p, f, grid, out)
        return EXIT_OK if verifier.grid_min_condition(p, f, grid).passed else EXIT_FAIL
    rep = verifier.grid_min_condition(p, f, grid)
    out.write(dumps({"params": p.to_dict(), "report": rep.to_dict()}) + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_extremal(a, out):
    p = _class_params(a)
    if a.n is not None:
        f = kernel.extremal_function(p, a.n, a.order)
    else:
        if a.partial_m < 1:
            raise UsageError("--partial-m must be >= 1")
        f = partial_sums.extremal_partial(p, a.partial_m, a.order)
    out.write(dumps(series_to_dict(f)) + "\n")
    return EXIT_OK


def cmd_neighborhood(a, out):
    p = _class_params(a)
    spec = neighborhood.NeighborhoodSpec(p, a.alpha)
    f = _read(a.f)
    if a.g is not None:
        g = _read(a.g)
        d = neighborhood.distance(p, f, g)
        inside = d <= spec.alpha
        out.write(dumps({"distance": d, "alpha": spec.alpha, "in_neighborhood": inside}) + "\n")
        return EXIT_OK if inside else EXIT_FAIL
    if a.trials is None:
        raise UsageError("give a second series or --trials")
    if a.seed is None:
        raise UsageError("--seed is required for sampling")
    hyp = neighborhood.hypothesis_check(spec, f, a.args, a.rings)
    rep = neighborhood.inclusion_property_test(spec, f, a.trials, a.seed, _grid(a))
    out.write(dumps({"hypothesis": hyp, "inclusion": rep.to_dict()}) + "\n")
    return EXIT_OK if hyp and rep.passed else EXIT_FAIL


def cmd_partial_sums(a, out):
    p = _class_params(a)
    f = _read(a.f)
    bounds = partial_sums.theorem_bounds(p, a.m, order=f.order)
    grid = _grid(a, partial_sums.sharpness_rays(a.m))
    reports = partial_sums.verify_ratio_bounds(p, f, a.m, grid)
    out.write(dumps({"bounds": bounds.to_dict(),
                     "reports": partial_sums.reports_to_dicts(reports)}) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_classify_conic(a, out):
    c = conic.ConicSpec(a.k, a.gamma)
    out.write(dumps({"k": c.k, "gamma": c.gamma, "domain": conic.classify(c).value}) + "\n")
    return EXIT_OK


COMMANDS = {
    "phi": cmd_phi,
    "check": cmd_check,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
    "neighborhood": cmd_neighborhood,
    "partial-sums": cmd_partial_sums,
    "classify-conic": cmd_classify_conic,
}


def _error(kind: str, message: str, code: int) -> int:
    sys.stderr.write(dumps({"error": kind, "message": message}) + "\n")
    return code


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except NumericalDegeneracy as exc:
        return _error(type(exc).__name__, str(exc), EXIT_DEGENERATE)
    except (GFTError, UsageError) as exc:
        return _error(type(exc).__name__, str(exc), EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
