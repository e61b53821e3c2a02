"""Command-line front end: ``radius``, ``verify``, ``table`` and ``plot``.

Exit codes: 0 on success, 1 on usage or parameter errors, 2 when a
closed form disagrees with the oracle or a sharpness check fails.
"""

import argparse
import json
import logging
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path

from .classes import ClassId, class_spec, parse_tag
from .errors import IoError, NephroidError, ParameterError
from .geometry import DEFAULT_SAMPLES, MEMBERSHIP_TOL, NephroidDomain
from .plot import plot_path, render_nephroid, render_sharpness, write_svg
from .solver import TOL_RADIUS, parameter_grid, reconcile
from .verify import TOL_TOUCH, check_sharpness

log = logging.getLogger("nephroid_radii")

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2
RECORD_KEYS = ("class", "params", "closed_form", "oracle", "agree", "sharp", "touch_points", "clearance")
PARAM_FLAGS = ("A", "B", "alpha", "n", "beta")


@dataclass(frozen=True)
class RunConfig:
    tol_radius: float = TOL_RADIUS
    tol_touch: float = TOL_TOUCH
    tol: float = MEMBERSHIP_TOL
    boundary_samples: int = DEFAULT_SAMPLES
    format: str = "text"
    out: str = "."

    def __post_init__(self):
        for name in ("tol_radius", "tol_touch", "tol"):
            if not getattr(self, name) > 0:
                raise ParameterError(f"{name} must be positive")
        if self.boundary_samples < 256:
            raise ParameterError("boundary_samples must be at least 256")
        if self.format not in ("json", "text"):
            raise ParameterError("format must be 'json' or 'text'")

    @property
    def domain(self):
        return NephroidDomain(boundary_samples=self.boundary_samples)


_CASTS = {f.name: f.type for f in fields(RunConfig)}


def _cast(name, value):
    kind = {"tol_radius": float, "tol_touch": float, "tol": float, "boundary_samples": int}
    try:
        return kind.get(name, str)(value)
    except ValueError:
        raise ParameterError(f"bad value for {name}: {value!r}") from None


def read_config(path):
    """Parse a ``key=value`` file; blank lines and ``#`` comments are skipped."""
    values = {}
    for number, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{number}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _CASTS:
            raise ParameterError(f"{path}:{number}: unknown key {key!r}")
        values[key] = _cast(key, value)
    return values


def build_config(args, environ=None):
    """Defaults, then the config file, then ``NEPHROID_OUT``, then flags."""
    environ = os.environ if environ is None else environ
    values = {}
    if getattr(args, "config", None):
        try:
            values.update(read_config(args.config))
        except OSError as exc:
            raise ParameterError(f"cannot read config: {exc}") from exc
    if environ.get("NEPHROID_OUT"):
        values["out"] = environ["NEPHROID_OUT"]
    for name in _CASTS:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    return RunConfig(**values)


def class_from_args(args):
    params = {k: getattr(args, k) for k in PARAM_FLAGS if getattr(args, k, None) is not None}
    return ClassId.make(parse_tag(args.selector), **params)


def _sig(x):
    if x is None:
        return "-"
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.9g}"


def _json_float(x):
    return None if x is None or not math.isfinite(x) else float(x)


def record(cid, result, report=None):
    """One schema-stable record for ``cid``.

    Without a sharpness report ``sharp`` and ``touch_points`` are the
    catalogued claims and ``clearance`` is ``None``.
    """
    spec = class_spec(cid)
    if report is None:
        sharp = bool(spec.extremal.sharp and spec.radius < 1.0)
        touches = [[t.value, t.angle] for t in spec.extremal.touches] if sharp else []
        clearance = None
    else:
        sharp = report.sharp_confirmed
        touches = [[value, angle] for angle, value in report.touch_found]
        clearance = _json_float(report.min_clearance_at_rho)
    return {
        "class": cid.tag.value,
        "params": dict(cid.params),
        "closed_form": result.closed_form,
        "oracle": result.oracle,
        "agree": bool(result.agree),
        "sharp": sharp,
        "touch_points": touches,
        "clearance": clearance,
    }


def _status(cid, sharp):
    if class_spec(cid).radius >= 1.0:
        return "inclusion"
    return "sharp" if sharp else "not sharp"


def format_text(rows, extra=None):
    """Aligned text table; ``extra`` adds a trailing column per row."""
    header = ["class", "closed_form", "oracle", "agree", "status", "touch_points", "clearance"]
    body = []
    for i, (cid, rec) in enumerate(rows):
        touches = " ".join(f"{_sig(v)}@{_sig(a)}" for v, a in rec["touch_points"]) or "-"
        line = [
            str(cid),
            _sig(rec["closed_form"]),
            _sig(rec["oracle"]),
            "yes" if rec["agree"] else "NO",
            _status(cid, rec["sharp"]),
            touches,
            _sig(rec["clearance"]),
        ]
        if extra is not None:
            line.append(extra[i])
        body.append(line)
    if extra is not None:
        header.append("result")
    widths = [max(len(r[j]) for r in [header] + body) for j in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + body]
    return "\n".join(out) + "\n"


def _emit(config, rows, extra=None, payload=None):
    if config.format == "json":
        data = payload if payload is not None else [rec for _, rec in rows]
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(format_text(rows, extra))


def cmd_radius(args, config):
    cid = class_from_args(args)
    result = reconcile(cid, config.tol_radius)
    rec = record(cid, result)
    _emit(config, [(cid, rec)], payload=rec)
    if not result.agree:
        log.error("%s: closed form %.12g disagrees with oracle %.12g", cid, result.closed_form, result.oracle)
        return EXIT_FAILED
    return EXIT_OK


def _verify_one(job):
    cid, config = job
    report = check_sharpness(cid, tol_touch=config.tol_touch, tol=config.tol, domain=config.domain)
    return cid, reconcile(cid, config.tol_radius), report


def cmd_verify(args, config):
    if args.all:
        if args.selector:
            raise ParameterError("give a class or --all, not both")
        ids = parameter_grid()
    elif args.selector:
        ids = [class_from_args(args)]
    else:
        raise ParameterError("verify needs a class selector or --all")
    jobs = [(cid, config) for cid in ids]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(job) for job in jobs]
    results.sort(key=lambda item: item[0])
    rows, verdicts, failed = [], [], []
    for cid, result, report in results:
        rows.append((cid, record(cid, result, report)))
        verdicts.append("PASS" if report.passed else "FAIL")
        if not report.passed:
            failed.append(str(cid))
    payload = {"results": [rec for _, rec in rows], "mismatches": failed}
    _emit(config, rows, verdicts, payload)
    if failed:
        sys.stderr.write("sharpness mismatch: " + ", ".join(failed) + "\n")
        return EXIT_FAILED
    return EXIT_OK


def cmd_table(args, config):
    rows = []
    for cid in parameter_grid():
        rows.append((cid, record(cid, reconcile(cid, config.tol_radius))))
    _emit(config, rows)
    bad = [str(cid) for cid, rec in rows if not rec["agree"]]
    if bad:
        sys.stderr.write("closed form disagrees with oracle: " + ", ".join(bad) + "\n")
        return EXIT_FAILED
    return EXIT_OK


def cmd_plot(args, config):
    if args.selector.strip().lower() == "nephroid":
        path = Path(config.out) / "plots" / "nephroid" / "boundary.svg"
        write_svg(render_nephroid(), path)
    else:
        cid = class_from_args(args)
        if args.at_rho == (args.r is not None):
            raise ParameterError("give exactly one of --r or --at-rho")
        r = class_spec(cid).radius if args.at_rho else args.r
        if not 0.0 < r <= 1.0:
            raise ParameterError("r must lie in (0, 1)")
        path = plot_path(config.out, cid, r)
        write_svg(render_sharpness(cid, r), path)
    sys.stdout.write(f"{path}\n")
    return EXIT_OK


def _add_params(p):
    p.add_argument("--A", type=float)
    p.add_argument("--B", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--beta", type=float)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"))
    common.add_argument("--config", help="key=value file (flags win over it)")
    common.add_argument("--out", help="output directory for plots")
    common.add_argument("--tol-radius", dest="tol_radius", type=float)
    common.add_argument("--tol-touch", dest="tol_touch", type=float)
    common.add_argument("--tol", type=float, help="membership tolerance")
    common.add_argument("--boundary-samples", dest="boundary_samples", type=int)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="nephroid-radii", description="Sharp nephroid-starlikeness radii and their checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radius", parents=[common], help="closed form against the oracle")
    p.add_argument("selector")
    _add_params(p)
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("verify", parents=[common], help="sharpness checks")
    p.add_argument("selector", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    _add_params(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="radius table over the standard grid")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("plot", parents=[common], help="write an SVG figure")
    p.add_argument("selector", help="a class, or 'nephroid' for the bare boundary")
    p.add_argument("--r", type=float)
    p.add_argument("--at-rho", dest="at_rho", action="store_true")
    _add_params(p)
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        config = build_config(args)
        return args.func(args, config)
    except (ParameterError, IoError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except NephroidError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
