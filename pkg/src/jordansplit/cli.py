"""Command-line front end: JSON job in, JSON report out.

    jordansplit semisimple --in job.json
    echo '{"nodes": [...]}' | jordansplit interpolate --mode float
    jordansplit selftest

Exit codes: 0 ok, 2 input error, 3 math-domain error, 4 verification
failure (under ``--strict``, or a failed interpolation check).
"""

import argparse
import sys
import time

from . import jsonio
from .errors import InputError, JordanSplitError, VerificationError
from .hermite import HermiteProblem, hermite_interpolate, interpolation_residual
from .poly import Poly
from .scalar import DEFAULT_EPS_ZERO, EXACT, FLOAT
from .simdiv import (
    PolyMatrix,
    exp_like_divide,
    generalized_divide,
    generalized_quotients,
    simultaneous_divide,
)
from .spectral import Config, semisimple_part

EXIT_OK = 0


class Request:
    """The decoded pieces of a job shared by every command."""

    def __init__(self, command, payload, mode, eps_cluster, eps_zero, tol_verify, strict):
        self.command = command
        self.payload = payload
        self.mode = mode
        self.eps_cluster = eps_cluster
        self.eps_zero = eps_zero
        self.tol_verify = tol_verify
        self.strict = strict


def _decode(request, build):
    """Run ``build(mode)``; in auto mode fall back to float on a complex scalar."""
    if request.mode is not None:
        return build(request.mode), request.mode
    try:
        return build(EXACT), EXACT
    except jsonio.ComplexInExactMode:
        return build(FLOAT), FLOAT


def _lambda_json(interp):
    return [jsonio.encode_matrix(L.entries) for L in interp.lambda_matrices]


def run_interpolate(request):
    jsonio.validate(request.payload, "interpolate")

    def build(mode):
        nodes = [(jsonio.scalar(n["x"], mode), jsonio.scalars(n["values"], mode))
                 for n in request.payload["nodes"]]
        return HermiteProblem(nodes, kind=mode, eps_cluster=request.eps_cluster,
                              eps_zero=request.eps_zero)

    problem, mode = _decode(request, build)
    interp = hermite_interpolate(problem)
    residual = interpolation_residual(problem, interp.r)
    if mode == EXACT:
        tol = 0
    else:
        tol = request.tol_verify if request.tol_verify is not None else 1e-8
    if residual > tol:
        raise VerificationError(
            f"interpolation conditions violated: residual {residual} > {tol}")
    result = {
        "r": jsonio.encode_poly(interp.r),
        "c": [[jsonio.encode_scalar(v) for v in col] for col in interp.c],
        "degree": None if interp.r.is_zero() else interp.degree,
        "lambda_matrices": _lambda_json(interp),
    }
    return mode, result, {"residuals": {"interpolation": jsonio.encode_scalar(residual)}}, []


def run_simdiv(request):
    payload = request.payload
    jsonio.validate(payload, "simdiv")

    def build(mode):
        g_doc = payload["g"]
        roots = None
        if isinstance(g_doc, dict) and "roots" in g_doc:
            roots = jsonio.scalars(g_doc["roots"], mode)
            g = None
        else:
            g = jsonio.poly(g_doc, mode, request.eps_zero)
        fs = [jsonio.poly(f, mode, request.eps_zero) for f in payload["f"]]
        pi = None
        if "pi" in payload:
            pi = PolyMatrix(tuple(tuple(jsonio.poly(p, mode, request.eps_zero) for p in row)
                                  for row in payload["pi"]))
        c = jsonio.scalar(payload["c_scalar"], mode) if "c_scalar" in payload else None
        return g, roots, fs, pi, c

    (g, roots, fs, pi, c), mode = _decode(request, build)
    if g is None:
        g = Poly.from_roots(roots, kind=mode)
    result = {}
    diagnostics = {}
    if pi is not None:
        if c is not None:
            raise InputError("'pi' and 'c_scalar' cannot be combined")
        r, E = generalized_divide(pi, g, fs, request.eps_cluster)
        q = generalized_quotients(pi, g, fs, r, E)
        result["E"] = jsonio.encode_poly(E)
    elif c is not None:
        if len(fs) != 1:
            raise InputError("the c_scalar route takes exactly one polynomial in 'f'")
        res = exp_like_divide(fs[0], g, c, payload["m"], request.eps_cluster)
        r, q = res.r, res.quotients
        diagnostics["residuals"] = {"remainder": jsonio.encode_scalar(res.residual)}
    else:
        res = simultaneous_divide(g, fs, roots=roots, eps_cluster=request.eps_cluster)
        r, q = res.r, res.quotients
        diagnostics["residuals"] = {"remainder": jsonio.encode_scalar(res.residual)}
    result["r"] = jsonio.encode_poly(r)
    result["q"] = [jsonio.encode_poly(p) for p in q]
    result["g"] = jsonio.encode_poly(g)
    return mode, result, diagnostics, []


def run_semisimple(request):
    payload = request.payload
    jsonio.validate(payload, "semisimple")
    A, mode = _decode(request, lambda mode: jsonio.matrix(payload["matrix"], mode))
    config = Config(mode=mode, eps_cluster=request.eps_cluster, eps_zero=request.eps_zero,
                    tol_verify=request.tol_verify, strict=request.strict)
    res = semisimple_part(A, config, m=payload.get("m"))
    info = res.spectrum
    result = {
        "S": jsonio.encode_matrix(res.S),
        "N": jsonio.encode_matrix(res.N),
        "eigenvalues": [jsonio.encode_scalar(v) for v in info.distinct_eigenvalues],
        "multiplicities": list(info.multiplicities),
        "m": info.m,
        "r": jsonio.encode_poly(res.r),
        "c": [[jsonio.encode_scalar(v) for v in col] for col in res.interpolant.c],
        "lambda_matrices": _lambda_json(res.interpolant),
        "char_poly": jsonio.encode_poly(info.char_poly),
        "residuals": {k: jsonio.encode_scalar(v) for k, v in res.residuals.as_dict().items()},
    }
    diagnostics = {"residuals": result["residuals"],
                   "tol_verify": jsonio.encode_scalar(res.tol_verify)}
    return mode, result, diagnostics, list(res.warnings)


COMMANDS = {
    "interpolate": run_interpolate,
    "simdiv": run_simdiv,
    "semisimple": run_semisimple,
}


def execute(request):
    """Run one job and return ``(report, exit_code)``."""
    start = time.perf_counter()
    try:
        mode, result, diagnostics, warnings = COMMANDS[request.command](request)
    except JordanSplitError as exc:
        report = {
            "status": "error",
            "command": request.command,
            "error": {"code": type(exc).__name__, "message": str(exc)},
            "diagnostics": {"warnings": [],
                            "timing_ms": (time.perf_counter() - start) * 1e3},
        }
        return report, exc.exit_code
    diagnostics["warnings"] = warnings
    diagnostics["timing_ms"] = (time.perf_counter() - start) * 1e3
    report = {"status": "ok", "command": request.command, "mode": mode,
              "result": result, "diagnostics": diagnostics}
    return report, EXIT_OK


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=[EXACT, FLOAT], default=None,
                        help="scalar field (default: exact unless the input has complex values)")
    common.add_argument("--eps-cluster", type=float, default=None,
                        help="float-mode eigenvalue cluster radius")
    common.add_argument("--eps-zero", type=float, default=DEFAULT_EPS_ZERO,
                        help="relative threshold for dropping float coefficients")
    common.add_argument("--tol-verify", type=float, default=None,
                        help="float-mode verification tolerance")
    common.add_argument("--strict", action="store_true",
                        help="treat verification failures and cluster warnings as errors")
    common.add_argument("--output", choices=["json", "pretty"], default="json")
    common.add_argument("--in", dest="infile", default="-", help="input file (default stdin)")
    common.add_argument("--out", dest="outfile", default="-", help="output file (default stdout)")
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog="jordansplit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("interpolate", parents=[common], help="Hermite interpolation")
    sub.add_parser("simdiv", parents=[common], help="simultaneous division by a separable divisor")
    sub.add_parser("semisimple", parents=[common], help="semisimple/nilpotent splitting")
    st = sub.add_parser("selftest", help="reproduce the reference examples")
    st.add_argument("--seed", type=int, default=0, help="seed for the random checks")
    st.add_argument("--random", type=int, default=20, help="number of random matrices")
    return parser


def _write(text, path):
    if path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        from .selftest import run_selftest
        ok = True
        for name, passed, detail in run_selftest(seed=args.seed, n_random=args.random):
            ok &= passed
            print(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")
        return EXIT_OK if ok else VerificationError.exit_code

    try:
        if args.infile == "-":
            text = sys.stdin.read()
        else:
            with open(args.infile) as fh:
                text = fh.read()
        payload = jsonio.loads(text)
    except (InputError, OSError) as exc:
        report = {"status": "error", "command": args.command,
                  "error": {"code": "InputError", "message": str(exc)},
                  "diagnostics": {"warnings": [], "timing_ms": 0.0}}
        _write(jsonio.dumps(report, args.output == "pretty"), args.outfile)
        return InputError.exit_code

    request = Request(args.command, payload, args.mode, args.eps_cluster, args.eps_zero,
                      args.tol_verify, args.strict)
    report, code = execute(request)
    _write(jsonio.dumps(report, args.output == "pretty"), args.outfile)
    return code


if __name__ == "__main__":
    sys.exit(main())
