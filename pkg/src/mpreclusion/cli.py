"""Command-line front end.

Exit codes: 0 success or verified, 1 counterexample found or certificate
invalid, 2 usage or parse error. Every option may also come from an
environment variable (``MPRECLUSION_<NAME>``); an explicit flag wins over the
environment, which wins over the built-in default.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import constructions as C
from .analysis import enumeration
from .analysis.extremal import brute_f, brute_g, brute_s, max_mp
from .analysis.registry import REGISTRY, default_suite, verify
from .analysis.reports import Mode, Status, TheoremReport, summary_csv
from .analysis.sampling import parallel_map
from .analysis.scans import nordhaus_gaddum_scan
from .graph import Graph, GraphInputError, delete_edges, from_edgelist, from_graph6, norm_edge, to_edgelist, to_graph6
from .matching import DeficiencyWitness, odd_component_count
from .preclusion import (
    DEFAULT_ORACLE_CAP,
    OracleCapExceeded,
    PreclusionCertificate,
    brute_force_mp,
    edge_disjoint_pm_lower_bound,
    mp,
    upper_bounds,
    verify_certificate,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
ENV_PREFIX = "MPRECLUSION_"
COMMANDS = ("mp", "bounds", "certify", "generate", "verify-theorem", "scan", "ng-scan", "s-f-g")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: Optional[str] = None
    format: str = "graph6"
    output: str = "text"
    seed: Optional[int] = None
    threads: int = 1
    oracle_cap: int = DEFAULT_ORACLE_CAP
    enum_cap: int = enumeration.MAX_ENUM_N
    extra: dict[str, Any] = field(default_factory=dict)


_SETTINGS = {
    # name: (type, default, allowed values)
    "format": (str, "graph6", ("graph6", "edgelist")),
    "output": (str, "text", ("text", "json", "csv")),
    "seed": (int, None, None),
    "threads": (int, 1, None),
    "oracle_cap": (int, DEFAULT_ORACLE_CAP, None),
    "enum_cap": (int, enumeration.MAX_ENUM_N, None),
}


def _resolve(name: str, flag: Any, env: dict[str, str]) -> Any:
    kind, default, allowed = _SETTINGS[name]
    if flag is not None:
        value = flag
    elif ENV_PREFIX + name.upper() in env:
        raw = env[ENV_PREFIX + name.upper()]
        try:
            value = kind(raw)
        except ValueError:
            raise UsageError(f"{ENV_PREFIX}{name.upper()}={raw!r} is not a valid {kind.__name__}") from None
    else:
        value = default
    if allowed and value not in allowed:
        raise UsageError(f"{name} must be one of {', '.join(allowed)}")
    return value


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=_SETTINGS["format"][2], help="graph input/output format (graph6)")
    common.add_argument("--output", choices=_SETTINGS["output"][2], help="report format (text)")
    common.add_argument("--seed", type=int, help="seed for sampled scans")
    common.add_argument("--threads", type=int, help="worker processes (1)")
    common.add_argument("--oracle-cap", dest="oracle_cap", type=int, help="edge cap for the brute-force oracle (16)")
    common.add_argument("--enum-cap", dest="enum_cap", type=int, help="largest n for exhaustive enumeration (7)")

    p = argparse.ArgumentParser(prog="mpreclusion", description="Matching preclusion solver and verification harness.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, helptext in (("mp", "compute mp with a certificate"), ("bounds", "closed-form upper bounds")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("input", nargs="?", help="input file (default stdin); graph6 inputs may hold one graph per line")
        if name == "mp":
            s.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")

    s = sub.add_parser("certify", parents=[common], help="check a preclusion certificate")
    s.add_argument("input", nargs="?", help="input file (default stdin)")
    s.add_argument("--cert", help="certificate JSON {\"F\": [[u, v], ...], \"S\": [...]}; omit to certify the solver's own")

    s = sub.add_parser("generate", parents=[common], help="emit a named construction")
    s.add_argument("name", choices=sorted(C.GENERATORS))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)

    s = sub.add_parser("verify-theorem", parents=[common], help="run one registry check")
    s.add_argument("theorem_id", choices=sorted(REGISTRY))
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--samples", type=int)

    s = sub.add_parser("scan", parents=[common], help="run the whole desk-scale registry suite")
    s.add_argument("--only", nargs="*", help="restrict to these theorem ids")

    s = sub.add_parser("ng-scan", parents=[common], help="Nordhaus-Gaddum scan at one order")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--samples", type=int, default=500)

    s = sub.add_parser("s-f-g", parents=[common], help="brute-force s, f and g")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--mode", choices=("labeled", "up_to_iso"), default="labeled")
    return p


def make_config(ns: argparse.Namespace, env: dict[str, str]) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for name in _SETTINGS:
        setattr(cfg, name, _resolve(name, getattr(ns, name, None), env))
    if cfg.threads < 1:
        raise UsageError("threads must be >= 1")
    cfg.input = getattr(ns, "input", None)
    skip = set(_SETTINGS) | {"command", "input"}
    cfg.extra = {k: v for k, v in vars(ns).items() if k not in skip}
    return cfg


# -- input ----------------------------------------------------------------------------

def _read_text(cfg: RunConfig, stdin: io.TextIOBase) -> str:
    if cfg.input is None or cfg.input == "-":
        return stdin.read()
    try:
        with open(cfg.input, encoding="ascii") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {cfg.input}: {exc}") from None


def parse_graphs(text: str, fmt: str) -> list[Graph | GraphInputError]:
    """graph6: one graph per non-blank line; edgelist: the whole text is one graph."""
    if fmt == "edgelist":
        try:
            return [from_edgelist(text)]
        except GraphInputError as exc:
            return [exc]
    out: list[Graph | GraphInputError] = []
    for no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            out.append(from_graph6(line, line=no))
        except GraphInputError as exc:
            out.append(exc)
    if not out:
        out.append(GraphInputError("graph6 input is empty"))
    return out


# -- per-graph work (top level so worker processes can pickle it) -----------------------

def certificate_json(c: PreclusionCertificate) -> dict[str, Any]:
    return {"F": [list(e) for e in sorted(c.F)], "S": sorted(c.witness.S), "odd_components": c.witness.odd_components}


def solve_item(item: tuple[Graph, bool, int]) -> dict[str, Any]:
    g, oracle, cap = item
    r = mp(g)
    out: dict[str, Any] = {"n": g.n, "m": g.m, "mp": "not_precludable" if r.value is None else r.value}
    out["certificate"] = None if r.certificate is None else certificate_json(r.certificate)
    if oracle:
        try:
            o = brute_force_mp(g, cap=cap)
            out["oracle_mp"] = "not_precludable" if o.value is None else o.value
            out["oracle_agrees"] = o.value == r.value
        except OracleCapExceeded as exc:
            out["oracle_error"] = str(exc)
    return out


def bounds_item(g: Graph) -> dict[str, Any]:
    out: dict[str, Any] = {"n": g.n, "m": g.m, "upper_bounds": upper_bounds(g).present() if g.n >= 2 else {}}
    if g.n % 2 == 0:
        out["edge_disjoint_pm_lower_bound"] = edge_disjoint_pm_lower_bound(g)
    return out


# -- commands -------------------------------------------------------------------------

def _batch(cfg: RunConfig, stdin, fn, args_of) -> tuple[int, list[dict]]:
    parsed = parse_graphs(_read_text(cfg, stdin), cfg.format)
    good = [(i, g) for i, g in enumerate(parsed) if isinstance(g, Graph)]
    done = parallel_map(fn, [args_of(g) for _, g in good], cfg.threads)
    by_index = {i: r for (i, _), r in zip(good, done)}
    results, code = [], EXIT_OK
    for i, g in enumerate(parsed):
        if isinstance(g, GraphInputError):
            results.append({"index": i, "error": str(g)})
            code = EXIT_USAGE
        else:
            row = {"index": i} | by_index[i]
            if row.get("oracle_agrees") is False:
                code = max(code, EXIT_FAIL)
            results.append(row)
    return code, results


def cmd_mp(cfg: RunConfig, stdin) -> tuple[int, dict]:
    oracle = bool(cfg.extra.get("oracle"))
    code, results = _batch(cfg, stdin, solve_item, lambda g: (g, oracle, cfg.oracle_cap))
    return code, {"results": results}


def cmd_bounds(cfg: RunConfig, stdin) -> tuple[int, dict]:
    code, results = _batch(cfg, stdin, bounds_item, lambda g: g)
    return code, {"results": results}


def _load_certificate(path: str, g: Graph) -> PreclusionCertificate:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        F = tuple(norm_edge(int(u), int(v)) for u, v in data["F"])
        S = tuple(int(v) for v in data["S"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed certificate {path}: {exc}") from None
    return PreclusionCertificate(F, DeficiencyWitness(S, int(data.get("odd_components", 0))))


def cmd_certify(cfg: RunConfig, stdin) -> tuple[int, dict]:
    parsed = parse_graphs(_read_text(cfg, stdin), cfg.format)
    if len(parsed) != 1:
        raise UsageError("certify expects exactly one graph")
    g = parsed[0]
    if isinstance(g, GraphInputError):
        return EXIT_USAGE, {"results": [{"index": 0, "error": str(g)}]}
    path = cfg.extra.get("cert")
    cert = _load_certificate(path, g) if path else mp(g).certificate
    if cert is None:
        return EXIT_FAIL, {"results": [{"index": 0, "n": g.n, "m": g.m, "valid": False,
                                         "reason": "graph is not precludable"}]}
    try:
        ok = verify_certificate(g, cert)
    except GraphInputError as exc:
        return EXIT_USAGE, {"results": [{"index": 0, "error": str(exc)}]}
    row = {"index": 0, "n": g.n, "m": g.m, "valid": ok, "certificate": certificate_json(cert)}
    if ok:
        row["certificate"]["odd_components"] = odd_component_count(delete_edges(g, cert.F), _mask(cert.witness.S))
    return (EXIT_OK if ok else EXIT_FAIL), {"results": [row]}


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def cmd_generate(cfg: RunConfig) -> tuple[int, Graph]:
    name, n, k = cfg.extra["name"], cfg.extra["n"], cfg.extra.get("k")
    if name in C.NEEDS_K and k is None:
        raise UsageError(f"generator {name} needs --k")
    try:
        return EXIT_OK, C.GENERATORS[name](n, k)
    except GraphInputError as exc:
        raise UsageError(str(exc)) from None


def _report_code(reports: Sequence[TheoremReport]) -> int:
    return EXIT_FAIL if any(r.status is Status.COUNTEREXAMPLE for r in reports) else EXIT_OK


def _call_checker(tid: str, params: dict[str, Any], cfg: RunConfig) -> TheoremReport:
    accepted = inspect.signature(REGISTRY[tid]).parameters
    if "seed" in accepted and cfg.seed is not None:
        params.setdefault("seed", cfg.seed)
    if "threads" in accepted:
        params.setdefault("threads", cfg.threads)
    unknown = [k for k in params if k not in accepted]
    if unknown:
        raise UsageError(f"{tid} does not take {', '.join('--' + k for k in unknown)}")
    missing = [k for k, p in accepted.items() if p.default is inspect.Parameter.empty and k not in params]
    if missing:
        raise UsageError(f"{tid} needs {', '.join('--' + k for k in missing)}")
    return verify(tid, **params)


def cmd_verify(cfg: RunConfig) -> tuple[int, dict]:
    tid = cfg.extra["theorem_id"]
    params = {k: cfg.extra[k] for k in ("n", "k", "m", "samples") if cfg.extra.get(k) is not None}
    rep = _call_checker(tid, params, cfg)
    return _report_code([rep]), {"reports": [rep.to_dict()]}


def _exhaustive_n(tid: str, params: dict) -> Optional[int]:
    n = params.get("n")
    return n if n is not None and n <= enumeration.MAX_ENUM_N else None


def cmd_scan(cfg: RunConfig) -> tuple[int, dict, list[TheoremReport]]:
    only = set(cfg.extra.get("only") or [])
    unknown = only - set(REGISTRY)
    if unknown:
        raise UsageError(f"unknown theorem ids: {', '.join(sorted(unknown))}")
    reports = []
    for tid, params in default_suite():
        if only and tid not in only:
            continue
        n = _exhaustive_n(tid, params)
        if n is not None and n > cfg.enum_cap:
            reports.append(TheoremReport(tid, dict(params), Status.SKIPPED, Mode.NONE, note="above --enum-cap"))
            continue
        reports.append(_call_checker(tid, dict(params), cfg))
    return _report_code(reports), {"reports": [r.to_dict() for r in reports]}, reports


def _check_enum(cfg: RunConfig, n: int) -> None:
    if n > min(cfg.enum_cap, enumeration.MAX_ENUM_N):
        raise UsageError(f"n={n} exceeds enumeration cap {min(cfg.enum_cap, enumeration.MAX_ENUM_N)} "
                         f"({enumeration.labeled_count(n)} labeled graphs)")


def cmd_ng(cfg: RunConfig) -> tuple[int, dict]:
    n = cfg.extra["n"]
    if n <= enumeration.MAX_ENUM_N:
        _check_enum(cfg, n)
    rep = nordhaus_gaddum_scan(n, samples=cfg.extra["samples"], seed=cfg.seed or 0, threads=cfg.threads)
    return _report_code([rep]), {"reports": [rep.to_dict()]}


def cmd_sfg(cfg: RunConfig) -> tuple[int, dict]:
    n, mode = cfg.extra["n"], cfg.extra["mode"]
    if n < 2:
        raise UsageError("s-f-g needs n >= 2")
    _check_enum(cfg, n)
    k = cfg.extra.get("k")
    ks = [k] if k is not None else list(range(0, max_mp(n, mode) + 1))
    rows = []
    for j in ks:
        rows.append({"k": j, "s": brute_s(n, j, mode).to_dict(), "f": brute_f(n, j, mode).to_dict(),
                     "g": brute_g(n, j, mode).to_dict()})
    return EXIT_OK, {"n": n, "mode": mode, "values": rows}


# -- rendering --------------------------------------------------------------------------

def _text_graph_row(r: dict) -> str:
    if "error" in r:
        return f"[{r['index']}] error: {r['error']}"
    if "valid" in r:
        return f"[{r['index']}] certificate {'valid' if r['valid'] else 'INVALID'}"
    if "upper_bounds" in r:
        parts = [f"{k}={v}" for k, v in r["upper_bounds"].items()]
        if "edge_disjoint_pm_lower_bound" in r:
            parts.append(f"pm_lower={r['edge_disjoint_pm_lower_bound']}")
        return f"[{r['index']}] n={r['n']} m={r['m']} " + " ".join(parts)
    value = "not precludable" if r["mp"] == "not_precludable" else r["mp"]
    line = f"[{r['index']}] n={r['n']} m={r['m']} mp={value}"
    c = r.get("certificate")
    if c:
        line += f" F={c['F']} S={c['S']} odd={c['odd_components']}"
    if "oracle_mp" in r:
        line += f" oracle={r['oracle_mp']}"
    return line


def _csv_rows(body: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "values" in body:
        w.writerow(["n", "k", "s", "f", "g"])
        for row in body["values"]:
            w.writerow([body["n"], row["k"], row["s"]["value"], row["f"]["value"], row["g"]["value"]])
        return buf.getvalue()
    w.writerow(["index", "n", "m", "mp", "F", "S", "odd_components", "error"])
    for r in body["results"]:
        c = r.get("certificate") or {}
        w.writerow([r["index"], r.get("n", ""), r.get("m", ""), r.get("mp", r.get("valid", "")),
                    json.dumps(c.get("F", "")), json.dumps(c.get("S", "")), c.get("odd_components", ""),
                    r.get("error", "")])
    return buf.getvalue()


def render(cfg: RunConfig, argv: Sequence[str], body: dict, seconds: float,
           reports: Optional[list[TheoremReport]] = None) -> str:
    if cfg.output == "json":
        doc = {"command": cfg.command, "argv": list(argv), "seed": cfg.seed} | body
        doc["timing"] = {"seconds": round(seconds, 6)}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if "reports" in body:
        if cfg.output == "csv":
            return summary_csv(reports if reports is not None else [_report_from(d) for d in body["reports"]])
        lines = []
        for d in body["reports"]:
            line = f"{d['theorem_id']:14s} {d['status']:22s} {d['mode']:22s} {json.dumps(d['params'])}"
            if d["counterexample"]:
                line += f" counterexample={json.dumps(d['counterexample'])}"
            if d["note"]:
                line += f" ({d['note']})"
            lines.append(line)
        return "\n".join(lines) + "\n"
    if cfg.output == "csv":
        return _csv_rows(body)
    if "values" in body:
        lines = [f"n={body['n']} mode={body['mode']}"]
        for row in body["values"]:
            lines.append(f"k={row['k']} s={row['s']['value']} f={row['f']['value']} g={row['g']['value']}")
        return "\n".join(lines) + "\n"
    return "\n".join(_text_graph_row(r) for r in body["results"]) + "\n"


def _report_from(d: dict) -> TheoremReport:
    return TheoremReport(d["theorem_id"], d["params"], Status(d["status"]), Mode(d["mode"]))


# -- entry point --------------------------------------------------------------------------

def run(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None,
        env: Optional[dict[str, str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    env = dict(os.environ if env is None else env)
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    t0 = time.perf_counter()
    try:
        cfg = make_config(ns, env)
        reports = None
        if cfg.command == "generate":
            code, g = cmd_generate(cfg)
            stdout.write(to_edgelist(g) if cfg.format == "edgelist" else to_graph6(g) + "\n")
            return code
        if cfg.command == "mp":
            code, body = cmd_mp(cfg, stdin)
        elif cfg.command == "bounds":
            code, body = cmd_bounds(cfg, stdin)
        elif cfg.command == "certify":
            code, body = cmd_certify(cfg, stdin)
        elif cfg.command == "verify-theorem":
            code, body = cmd_verify(cfg)
        elif cfg.command == "scan":
            code, body, reports = cmd_scan(cfg)
        elif cfg.command == "ng-scan":
            code, body = cmd_ng(cfg)
        else:
            code, body = cmd_sfg(cfg)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except enumeration.EnumerationCapExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    stdout.write(render(cfg, argv, body, time.perf_counter() - t0, reports))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
