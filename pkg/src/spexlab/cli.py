"""Command-line front end: construct, check, rho, transform, search, verify.

Exit codes are a stable contract: 0 success, 1 domain error (bad
parameters, malformed graph6, usage errors), 2 verification failure (a
suite reported failures), 3 internal or convergence error. Diagnostics go
to stderr; results go to stdout or the --out file. A --config file holds
key=value lines (flag names without the dashes); explicit flags override.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import FamilySpec, PathPartition, construct, transform
from .constructions import transform_successors
from .forbidden import ForbiddenSpec, is_free
from .graph import Graph
from .graph6 import graph6_decode, graph6_encode
from .recognition import is_outerplanar, is_planar
from .search import SearchConfig, exhaustive_spex, local_search_spex
from .spectral import ConvergenceError, spectral_radius
from . import experiments

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_INTERNAL = 3

FORMATS = ("json", "csv", "g6", "text")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are domain errors, exit 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="spexlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    p.sub_map = {}

    def _sub(name, **kw):
        sp = sub.add_parser(name, **kw)
        p.sub_map[name] = sp
        return sp

    def common(sp):
        sp.add_argument("--format", choices=FORMATS, default="text")
        sp.add_argument("--out", default=None, help="write results here instead of stdout")
        sp.add_argument("--config", default=None, help="key=value defaults file")

    sp = _sub("construct", description="Build a named family graph.")
    sp.add_argument("--family", required=True, help="kind:t=..,l=..,n=.. (wheel/star/jn/k2n2/claimw/k1hop/k2hp)")
    common(sp)
    sp.set_defaults(handler=_cmd_construct)

    sp = _sub("check", description="Class membership and freeness checks.")
    _graph_input(sp)
    sp.add_argument("--class", dest="klass", choices=("outerplanar", "planar"), default=None)
    sp.add_argument("--forbidden", default=None, help="C{l}, B{t}x{l} or M{k}")
    common(sp)
    sp.set_defaults(handler=_cmd_check)

    sp = _sub("rho", description="Certified spectral radius.")
    _graph_input(sp)
    sp.add_argument("--tol", type=float, default=1e-10)
    common(sp)
    sp.set_defaults(handler=_cmd_rho)

    sp = _sub("transform", description="Apply one path-partition transformation.")
    sp.add_argument("--partition", default=None, help="comma-separated path orders, e.g. 5,2,2")
    sp.add_argument("--i", type=int, default=0, help="index of the longer part (0-based)")
    sp.add_argument("--j", type=int, default=1, help="index of the shorter part (0-based)")
    sp.add_argument("--successors", action="store_true", help="list every one-step successor instead")
    common(sp)
    sp.set_defaults(handler=_cmd_transform)

    sp = _sub("search", description="Spectral-maximizer search over a graph class.")
    sp.add_argument("--nmin", type=int, default=None)
    sp.add_argument("--nmax", type=int, default=None)
    sp.add_argument("--class", dest="klass", choices=("outerplanar", "planar"), default="outerplanar")
    sp.add_argument("--forbidden", default=None)
    sp.add_argument("--mode", choices=("exhaustive", "local"), default="exhaustive")
    sp.add_argument("--disconnected", action="store_true", help="drop the connected-only restriction")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--checkpoint", default=None)
    sp.add_argument("--cap", type=int, default=10, help="refuse exhaustive search above this n")
    sp.add_argument("--start-g6", default=None, help="start graph for local mode")
    sp.add_argument("--restarts", type=int, default=0)
    common(sp)
    sp.set_defaults(handler=_cmd_search)

    sp = _sub("verify", description="Run a verification suite (or 'all').")
    sp.add_argument("--suite", default=None)
    sp.add_argument("--nmax", type=int, default=None, help="suite size knob where supported")
    sp.add_argument("--param", action="append", default=[], help="extra suite parameter key=value")
    sp.add_argument("--threads", type=int, default=None)
    common(sp)
    sp.set_defaults(handler=_cmd_verify)

    return p


def _graph_input(sp):
    sp.add_argument("--g6", default=None, help="graph6 line")
    sp.add_argument("--family", default=None, help="family spec as in construct")


def _load_graph(args) -> Graph:
    if (args.g6 is None) == (args.family is None):
        raise UsageError("provide exactly one of --g6 / --family")
    if args.g6 is not None:
        return graph6_decode(args.g6)
    return construct(FamilySpec.parse(args.family))


def _coerce(text: str):
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            pass
    if "," in text:
        return tuple(_coerce(p) for p in text.split(",") if p)
    return text


def _apply_config(parser: _Parser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if getattr(args, "config", None):
        defaults = {}
        with open(args.config) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line {raw.rstrip()!r}")
                key, _, val = line.partition("=")
                defaults[key.strip().replace("-", "_")] = _coerce(val.strip())
        parser.set_defaults(**defaults)
        # subparser defaults clobber the parent's, so set them there too
        if args.subcommand in parser.sub_map:
            parser.sub_map[args.subcommand].set_defaults(**defaults)
        args = parser.parse_args(argv)  # explicit flags still win
    return args


def _csv(header: str, rows: list[str]) -> str:
    return "\n".join([header] + rows)


def _require(args, *names) -> None:
    """Required flags are enforced here, not by argparse, so a --config
    file can supply them."""
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")


def _cmd_construct(args) -> tuple[int, str]:
    _require(args, "family")
    spec = FamilySpec.parse(args.family)
    g = construct(spec)
    enc = graph6_encode(g)
    if args.format == "g6":
        return EXIT_OK, enc
    payload = {"family": str(spec), "n": g.n, "edges": g.edge_count(), "graph6": enc}
    if args.format == "json":
        return EXIT_OK, json.dumps(payload, sort_keys=True)
    if args.format == "csv":
        return EXIT_OK, _csv(
            "family,n,edges,graph6", [f"{spec},{g.n},{g.edge_count()},{enc}"]
        )
    return EXIT_OK, f"{spec} n={g.n} edges={g.edge_count()} {enc}"


def _cmd_check(args) -> tuple[int, str]:
    g = _load_graph(args)
    if args.klass is None and args.forbidden is None:
        raise UsageError("nothing to check; give --class and/or --forbidden")
    payload: dict = {"graph6": graph6_encode(g), "n": g.n}
    if args.klass is not None:
        rec = is_outerplanar(g) if args.klass == "outerplanar" else is_planar(g)
        payload["class"] = args.klass
        payload["in_class"] = rec.planar
    if args.forbidden is not None:
        spec = ForbiddenSpec.parse(args.forbidden)
        payload["forbidden"] = str(spec)
        payload["free"] = is_free(g, spec)
    if args.format == "json":
        return EXIT_OK, json.dumps(payload, sort_keys=True)
    if args.format == "csv":
        keys = [k for k in ("class", "in_class", "forbidden", "free") if k in payload]
        return EXIT_OK, _csv(
            "graph6,n," + ",".join(keys),
            [",".join([payload["graph6"], str(payload["n"])] + [str(payload[k]) for k in keys])],
        )
    if args.format == "g6":
        raise UsageError("--format g6 makes no sense for check")
    bits = []
    if "in_class" in payload:
        bits.append(f"{payload['class']}={payload['in_class']}")
    if "free" in payload:
        bits.append(f"{payload['forbidden']}-free={payload['free']}")
    return EXIT_OK, " ".join(bits)


def _cmd_rho(args) -> tuple[int, str]:
    g = _load_graph(args)
    est = spectral_radius(g, tol=args.tol)
    payload = {
        "n": g.n,
        "rho": est.rho,
        "residual": est.residual,
        "iterations": est.iterations,
    }
    if args.format == "json":
        return EXIT_OK, json.dumps(payload, sort_keys=True)
    if args.format == "csv":
        return EXIT_OK, _csv(
            "n,rho,residual,iterations",
            [f"{g.n},{est.rho!r},{est.residual:.6e},{est.iterations}"],
        )
    if args.format == "g6":
        raise UsageError("--format g6 makes no sense for rho")
    return EXIT_OK, f"rho {est.rho!r} residual {est.residual:.3e} iterations {est.iterations}"


def _parse_partition(text: str) -> PathPartition:
    try:
        parts = [int(p) for p in text.replace("[", "").replace("]", "").split(",") if p.strip()]
    except ValueError as e:
        raise UsageError(f"bad partition {text!r}: {e}") from None
    return PathPartition(parts)


def _cmd_transform(args) -> tuple[int, str]:
    _require(args, "partition")
    h = _parse_partition(args.partition)
    if args.successors:
        succ = transform_successors(h)
        if args.format == "json":
            return EXIT_OK, json.dumps(
                {"partition": list(h.parts), "successors": [list(s.parts) for s in succ]}
            )
        if args.format == "csv":
            return EXIT_OK, _csv("successor", [";".join(map(str, s.parts)) for s in succ])
        return EXIT_OK, "\n".join(str(s) for s in succ)
    result = transform(h, args.i, args.j)
    if args.format == "json":
        return EXIT_OK, json.dumps(
            {"partition": list(h.parts), "i": args.i, "j": args.j, "result": list(result.parts)}
        )
    if args.format == "csv":
        return EXIT_OK, _csv("result", [";".join(map(str, result.parts))])
    if args.format == "g6":
        raise UsageError("--format g6 makes no sense for transform")
    return EXIT_OK, str(result)


def _cmd_search(args) -> tuple[int, str]:
    _require(args, "nmin", "nmax")
    forbidden = ForbiddenSpec.parse(args.forbidden) if args.forbidden else None
    config = SearchConfig(
        n_min=args.nmin,
        n_max=args.nmax,
        klass=args.klass,
        forbidden=forbidden,
        connected_only=not args.disconnected,
        mode=args.mode,
        seed=args.seed,
        threads=args.threads,
        checkpoint=args.checkpoint,
        exhaustive_cap=args.cap,
    )
    if args.mode == "local":
        if not args.start_g6:
            raise UsageError("local mode needs --start-g6")
        report = local_search_spex(config, graph6_decode(args.start_g6), args.restarts)
    else:
        report = exhaustive_spex(config)
    if args.format == "json":
        return EXIT_OK, report.to_json()
    if args.format == "csv":
        return EXIT_OK, "\n".join(report.csv_lines())
    if args.format == "g6":
        lines = [c for e in report.entries for c in e["certificates"]]
        return EXIT_OK, "\n".join(lines)
    lines = [
        f"n={e['n']} rho={e['best_rho']:.10f} certificates={len(e['certificates'])}"
        f" candidates={e['candidates']}"
        for e in report.entries
    ]
    return EXIT_OK, "\n".join(lines)


def _cmd_verify(args) -> tuple[int, str]:
    _require(args, "suite")
    params: dict = {}
    if args.nmax is not None:
        params["nmax"] = args.nmax
    for item in args.param:
        if "=" not in item:
            raise UsageError(f"bad --param {item!r}; expected key=value")
        key, _, val = item.partition("=")
        params[key.strip()] = _coerce(val.strip())
    suites = sorted(experiments.SUITES) if args.suite == "all" else [args.suite]
    results = [experiments.run_suite(s, params or None, args.threads) for s in suites]
    for r in results:
        print(r.summary(), file=sys.stderr)
        for d in r.failures + r.indeterminates:
            print(f"  {d}", file=sys.stderr)
    code = EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY
    if args.format == "json":
        markdown, payload = experiments.traceability(results)
        return code, json.dumps(payload, sort_keys=True, indent=2)
    if args.format == "csv":
        rows = [
            f"{r.suite},{r.cases},{r.passes},{len(r.failures)},{len(r.indeterminates)}"
            for r in results
        ]
        return code, _csv("suite,cases,passes,failures,indeterminates", rows)
    if args.format == "g6":
        raise UsageError("--format g6 makes no sense for verify")
    markdown, _ = experiments.traceability(results)
    return code, markdown


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = _apply_config(parser, sys.argv[1:] if argv is None else argv)
        if getattr(args, "handler", None) is None:
            raise UsageError("missing subcommand; see --help")
        code, text = args.handler(args)
        _emit(text, args.out)
        return code
    except SystemExit as e:  # argparse --help
        return EXIT_OK if e.code in (0, None) else EXIT_DOMAIN
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as e:
        print(f"convergence error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:  # pragma: no cover - defensive
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
