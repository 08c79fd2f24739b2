"""Command line: ``nodes``, ``scan`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import checks, cubic, elliptic, lebesgue, symmetric
from .errors import DegenerateInput, LebesgueError, UsageError
from .quadrature import DEFAULT_QUAD, QuadratureSpec

SCHEMES = ("symmetric", "nonsym", "elliptic", "rational_nonsym", "chebyshev")


@dataclass
class ScanResult:
    scheme_tag: str
    rows: list[tuple[int, float, float, float | None]] = field(default_factory=list)
    fit: lebesgue.GrowthFit | None = None
    failed: list[dict] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("n,lambda,argmax,bound\n")
        for n, lam, arg, bound in self.rows:
            b = "" if bound is None else f"{bound:.14e}"
            buf.write(f"{n},{lam:.14e},{arg:.14e},{b}\n")
        return buf.getvalue()

    def summary(self) -> dict:
        out = {"scheme": self.scheme_tag, "rows": len(self.rows), "failed": self.failed}
        if self.fit is None:
            out.update(degenerate=True, slope=None, intercept=None, residual_rms=0.0)
        else:
            out.update(degenerate=False, slope=self.fit.slope, intercept=self.fit.intercept,
                       residual_rms=self.fit.residual_rms)
        return out


def _quad(args) -> QuadratureSpec:
    return QuadratureSpec(
        panel_count=args.quad_panels or DEFAULT_QUAD.panel_count,
        refine_limit=DEFAULT_QUAD.refine_limit,
        abs_tol=args.quad_tol or DEFAULT_QUAD.abs_tol,
    )


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"scheme {args.scheme!r} requires {', '.join(missing)}")


def build_nodes(scheme: str, a, b, n: int, quad: QuadratureSpec = DEFAULT_QUAD):
    """Node system for one scheme, plus the pole inverses of its rational variant (or None)."""
    if scheme == "chebyshev":
        return lebesgue.chebyshev_system(n), None
    if scheme == "symmetric":
        return symmetric.symmetric_nodes(symmetric.SymmetricPairConfig(a, n)), None
    if scheme == "nonsym":
        return cubic.nonsym_nodes(a, n), None
    if scheme == "rational_nonsym":
        ns = cubic.rational_nodes_nonsym(a, b, n)
        return ns, ns.meta["pole_inverses"]
    if scheme == "elliptic":
        cfg = elliptic.EllipticConfig(a, b, quad)
        alpha = elliptic.solve_alpha_n(cfg, n)
        return elliptic.elliptic_nodes(cfg, n, alpha), [1.0 / alpha]
    raise UsageError(f"unknown scheme {scheme!r}")


def scan_row(scheme: str, a, b, n: int, quad: QuadratureSpec = DEFAULT_QUAD):
    """``(n, lambda, argmax, bound)``; ``lambda`` is the rational constant for rational schemes."""
    ns, poles = build_nodes(scheme, a, b, n, quad)
    rep = lebesgue.lebesgue_constant(ns, poles)
    bound = None
    if scheme == "symmetric":
        big = lebesgue.lebesgue_constant(lebesgue.chebyshev_system(n)).constant
        bound = symmetric.pair_bound(a, big)
    return n, rep.constant, rep.argmax, bound


def _scan_job(job):
    scheme, a, b, n, quad = job
    try:
        return scan_row(scheme, a, b, n, quad), None
    except LebesgueError as exc:
        return None, {"n": n, "error": exc.code, "detail": str(exc)}


def run_scan(scheme: str, a, b, n_list, quad: QuadratureSpec = DEFAULT_QUAD, jobs: int = 1) -> ScanResult:
    tag = f"{scheme}(a={a!r},b={b!r})"
    work = [(scheme, a, b, n, quad) for n in n_list]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_scan_job, work))
    else:
        results = [_scan_job(w) for w in work]
    result = ScanResult(tag)
    for row, err in results:
        if row is None:
            result.failed.append(err)
        else:
            result.rows.append(row)
    result.rows.sort(key=lambda r: r[0])
    try:
        result.fit = lebesgue.growth_fit([(r[0], r[1]) for r in result.rows])
    except DegenerateInput:
        result.fit = None
    return result


def _parse_n_list(text: str) -> list[int]:
    vals = [int(v) for v in text.replace(" ", "").split(",") if v]
    if not vals or vals != sorted(vals) or len(set(vals)) != len(vals):
        raise argparse.ArgumentTypeError("--n-list must be a nonempty ascending comma-separated list")
    return vals


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lebesgue-intervals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("scheme", choices=SCHEMES)
        p.add_argument("--a", type=float)
        p.add_argument("--b", type=float)
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--quad-panels", type=int, help="Gauss-Legendre points per panel")
        p.add_argument("--quad-tol", type=float, help="quadrature absolute tolerance")

    p_nodes = sub.add_parser("nodes", help="build a node system and print it as JSON")
    common(p_nodes)
    p_nodes.add_argument("--n", type=int, required=True)

    p_scan = sub.add_parser("scan", help="Lebesgue constants over a list of n, CSV plus a JSON fit summary")
    common(p_scan)
    p_scan.add_argument("--n-list", type=_parse_n_list, required=True)
    p_scan.add_argument("--jobs", type=int, default=1)

    p_verify = sub.add_parser("verify", help="run self-check suites")
    p_verify.add_argument("suite", choices=(*checks.SUITES, "all"))
    return parser


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _required(args) -> tuple:
    if args.scheme in ("symmetric", "nonsym"):
        _need(args, "a")
    elif args.scheme in ("elliptic", "rational_nonsym"):
        _need(args, "a", "b")
    return args.a, args.b


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "nodes":
            a, b = _required(args)
            ns, _ = build_nodes(args.scheme, a, b, args.n, _quad(args))
            _write(ns.to_json() + "\n", args.out)
            return 0
        if args.command == "scan":
            a, b = _required(args)
            result = run_scan(args.scheme, a, b, args.n_list, _quad(args), args.jobs)
            summary = json.dumps(result.summary()) + "\n"
            if args.out:
                _write(result.to_csv(), args.out)
                sys.stdout.write(summary)
            else:
                sys.stdout.write(result.to_csv())
                sys.stderr.write(summary)
            return 0
        suites = checks.SUITES if args.suite == "all" else {args.suite: checks.SUITES[args.suite]}
        ok = True
        for name, suite in suites.items():
            print(f"== {name}")
            for check in suite():
                print(check.line())
                ok &= check.passed
        return 0 if ok else 1
    except LebesgueError as exc:
        print(json.dumps({"error": exc.code, "detail": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
