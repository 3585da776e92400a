"""Command-line front end.

Every subcommand builds a JSON-able report; ``--json`` prints it canonically
(sorted keys, no timestamps) inside an envelope whose ``meta`` field holds the
run metadata, and the text output is rendered from the same report.

Exit codes: 0 when every check passes, 2 for malformed input or usage errors,
3 when a consistency check fails (VIOLATION, FAIL, or a presentation that
disagrees with the resultant).
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, data_path
from .coverhomology.cover import cover_module, redei_check, structure_check
from .errors import HakenlabError, MissingData, ParseError, PresentationMismatch, RelationViolated
from .eulerclass.cocycle import (
    CocycleContext,
    RelationStatus,
    SurfaceTuple,
    euler_number,
    maximal_euler,
)
from .eulerclass.doubling import PairSystem, certify_free_discrete, double_tuple
from .eulerclass.pingpong import pingpong_oracle
from .eulerclass.twist import goldman_discrete_twist, twist_flow_numeric
from .exactfield import Mat2, parse_point
from .hakenbound import BranchProfile, haken_threshold, profile_from_record
from .io import dumps_stable, load_corpus, load_representation

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 2, 3

BASEPOINTS = ("inf", "0", "1", "-1", "1/2", "2")
CONJUGATORS = 10
PRIMES = (2, 3, 5, 7)


def seed_from_env(default: int = 0) -> int:
    value = os.environ.get("HAKENLAB_SEED")
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"HAKENLAB_SEED must be an integer, got {value!r}") from None


def _residual_text(m: Mat2 | None) -> str | None:
    if m is None:
        return None
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in m.rows()) + "]"


def _random_conjugator(rng: random.Random) -> Mat2:
    # product of elementary matrices: determinant 1, rational entries
    out = Mat2.identity()
    for _ in range(3):
        k = rng.randint(-3, 3)
        out = out * (Mat2(1, k, 0, 1) if rng.random() < 0.5 else Mat2(1, 0, k, 1))
    return out


# report builders ---------------------------------------------------------


def euler_report(t: SurfaceTuple, seed: int = 0) -> dict:
    """Euler number of a closed surface tuple plus basepoint and conjugation self-checks."""
    if t.relation is RelationStatus.NONE:
        raise RelationViolated(
            "product of commutators is not +-I", residual=t.partial_products()[-1]
        )
    e = euler_number(t)
    top = maximal_euler(t.genus)
    by_point = {
        text: euler_number(t, CocycleContext(parse_point(text))) for text in BASEPOINTS
    }
    rng = random.Random(seed)
    by_conj = [euler_number(t.conjugate(_random_conjugator(rng))) for _ in range(CONJUGATORS)]
    checks = {
        "basepoint_independent": all(v == e for v in by_point.values()),
        "conjugation_invariant": all(v == e for v in by_conj),
        "milnor_wood": abs(e) <= top,
    }
    return {
        "genus": t.genus,
        "relation": t.relation.value,
        "euler": e,
        "maximal": top,
        "verdict": "certified" if top > 0 and abs(e) == top else "unknown",
        "basepoints": by_point,
        "conjugates": by_conj,
        "checks": checks,
        "residuals": {"relation": t.relation.value},
        "status": "PASS" if all(checks.values()) else "VIOLATION",
    }


def certify_report(ps: PairSystem) -> dict:
    cert = certify_free_discrete(ps)
    oracle = pingpong_oracle(ps)
    doubled = double_tuple(ps)
    c, o = cert.verdict.short, oracle.short
    agreement = {
        ("certified", "certified"): "both",
        ("certified", "unknown"): "certificate-only",
        ("unknown", "certified"): "oracle-only",
        ("unknown", "unknown"): "neither",
    }[c, o]
    return {
        "n": ps.n,
        "genus": cert.genus,
        "euler": cert.euler,
        "maximal": cert.maximal,
        "verdict": c,
        "oracle": o,
        "residuals": {"h_trace": str(ps.h.trace()), "doubled_relation": doubled.relation.value},
        "agreement": agreement,
        # both verdicts are one-sided, so only a malformed certificate is a contradiction
        "status": "PASS" if c == "unknown" or abs(cert.euler) == cert.maximal else "VIOLATION",
    }


def twist_report(t: SurfaceTuple, kappa: int, time: float) -> dict:
    twisted = goldman_discrete_twist(t, kappa)
    back = goldman_discrete_twist(twisted, kappa)
    flow = twist_flow_numeric(t, kappa, time)
    before = euler_number(t)
    after = euler_number(twisted)
    return {
        "genus": t.genus,
        "kappa": kappa,
        "euler_before": before,
        "euler_after": after,
        "euler_preserved": before == after,
        "involution": back == t,
        "time": time,
        "relation_residual": float(f"{flow.relation_residual:.3e}"),
        "gamma_trace_drift": float(f"{flow.gamma_trace_drift:.3e}"),
        "generator_trace_drift": float(f"{flow.generator_trace_drift:.3e}"),
        "status": "PASS" if back == t and flow.relation_residual < 1e-9 else "VIOLATION",
    }


def cover_report(rec, p: int) -> dict:
    out = structure_check(rec, p).to_json()
    W = cover_module(rec, p)
    trivial = W.kills([[x - int(i == j) for j, x in enumerate(r)] for i, r in enumerate(W.Z)])
    out["deck_order"] = 1 if trivial else p
    out["order"] = W.group.order
    return out


def haken_record_report(rec, p: int, q: int, dim: int | None = None) -> dict:
    out = haken_threshold(profile_from_record(rec, p, q, dim)).to_json()
    out.update({"name": rec.name, "p": p, "q": q})
    return out


def link_report(rec) -> dict:
    """Every check that applies to one link record."""
    covers = {}
    for p in PRIMES:
        try:
            covers[str(p)] = cover_report(rec, p)
        except MissingData as exc:
            covers[str(p)] = {"status": "N/A", "reasons": [str(exc)]}
    out = {"name": rec.name, "kind": "link", "covers": covers}
    bad = [c["status"] for c in covers.values() if c["status"] == "FAIL"]
    if rec.components == 2:
        out["redei"] = redei_check(rec).to_json()
        if out["redei"]["verdict"] == "VIOLATION":
            bad.append("VIOLATION")
    if rec.chiF is not None and rec.P is not None:
        out["haken"] = haken_record_report(rec, 2, 3)
    out["status"] = "VIOLATION" if bad else "PASS"
    return out


def representation_report(name: str, pairs, seed: int) -> dict:
    """Surface tuples get the Euler checks; other pair lists are certified."""
    out: dict = {"name": name, "kind": "representation"}
    t = SurfaceTuple(pairs)
    if t.relation is not RelationStatus.NONE:
        out["euler"] = euler_report(t, seed)
        out["status"] = out["euler"]["status"]
        return out
    ps = PairSystem(pairs)
    try:
        out["certify"] = certify_report(ps)
    except HakenlabError as exc:
        out["certify"] = {"error": type(exc).__name__, "message": str(exc)}
        out["status"] = "PASS"
        return out
    out["doubled"] = euler_report(double_tuple(ps), seed)
    statuses = (out["certify"]["status"], out["doubled"]["status"])
    out["status"] = "PASS" if all(s == "PASS" for s in statuses) else "VIOLATION"
    return out


def _link_job(rec) -> dict:
    try:
        return link_report(rec)
    except PresentationMismatch as exc:
        return {"name": rec.name, "kind": "link", "status": "VIOLATION", "error": str(exc)}


def _rep_job(args) -> dict:
    name, path, seed = args
    try:
        pairs = load_representation(path)
        return representation_report(name, pairs, seed)
    except HakenlabError as exc:
        status = "VIOLATION" if isinstance(exc, PresentationMismatch) else "ERROR"
        return {"name": name, "kind": "representation", "status": status,
                "error": f"{type(exc).__name__}: {exc}"}


def corpus_report(root: Path, jobs: int, seed: int) -> dict:
    links_src = root / "links.json" if (root / "links.json").exists() else root
    records = load_corpus(links_src) if any(root.glob("*.json")) or root.is_file() else []
    reps_dir = root / "reps"
    reps = sorted(reps_dir.glob("*.json")) if reps_dir.is_dir() else []
    rep_args = [(f.stem, str(f), seed) for f in reps]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            links = list(pool.map(_link_job, records))
            rep_out = list(pool.map(_rep_job, rep_args))
    else:
        links = [_link_job(r) for r in records]
        rep_out = [_rep_job(a) for a in rep_args]
    links.sort(key=lambda r: r["name"])
    rep_out.sort(key=lambda r: r["name"])
    everything = links + rep_out
    summary = {
        "links": len(links),
        "representations": len(rep_out),
        "violations": sorted(r["name"] for r in everything if r["status"] == "VIOLATION"),
        "errors": sorted(r["name"] for r in everything if r["status"] == "ERROR"),
    }
    return {"links": links, "representations": rep_out, "summary": summary}


# text rendering ------------------------------------------------------------


def _render_euler(r: dict) -> list[str]:
    lines = [
        f"genus {r['genus']}, relation {r['relation']}",
        f"euler {r['euler']} (maximum {r['maximal']}), verdict {r['verdict']}",
        "basepoints: " + ", ".join(f"{k}->{v}" for k, v in r["basepoints"].items()),
        "conjugates: " + " ".join(str(v) for v in r["conjugates"]),
    ]
    lines += [f"{k}: {'yes' if v else 'NO'}" for k, v in r["checks"].items()]
    lines.append(r["status"])
    return lines


def _render_certify(r: dict) -> list[str]:
    return [
        f"n = {r['n']}, doubled genus {r['genus']}, euler {r['euler']} (maximum {r['maximal']})",
        f"{'certificate':<12}{'oracle':<12}agreement",
        f"{r['verdict']:<12}{r['oracle']:<12}{r['agreement']}",
        r["status"],
    ]


def _render_cover(r: dict) -> str:
    if r["status"] == "N/A":
        return f"{r.get('name', '?')}: n/a ({r['reasons'][0]})"
    line = f"{r['name']} p={r['p']}: {r['group']}, {r['status']}, kappa-1={r['kappa'] - 1}"
    if r["h0"] is not None:
        line += f"; h0={r['h0']} h1={r['h1']} h2={r['h2']}"
    line += f"; deck order {r['deck_order']}"
    if r["reasons"] and r["status"] != "PASS":
        line += " (" + "; ".join(r["reasons"]) + ")"
    return line


def _render_redei(r: dict) -> str:
    return f"{r['name']}: d={r['d']}, H_1 = {r['group']}, {r['verdict']}"


def _render_haken(r: dict) -> str:
    head = f"{r['name']}: " if "name" in r else ""
    word = "Certified" if r["verdict"] == "CertifiedVirtuallyHaken" else "Inconclusive"
    return f"{head}threshold {r['threshold']}, dim {r['dim']} ({r['source']}): {word}"


def render_text(command: str, result) -> str:
    if command == "euler":
        lines = _render_euler(result)
    elif command == "certify":
        lines = _render_certify(result)
    elif command == "twist":
        lines = [f"{k}: {v}" for k, v in sorted(result.items())]
    elif command == "cover":
        lines = [_render_cover(r) for r in result]
    elif command == "redei":
        lines = [_render_redei(r) for r in result]
    elif command == "haken":
        lines = [_render_haken(r) for r in result]
    else:
        lines = []
        for r in result["links"]:
            parts = [f"{p}:{c['status']}" for p, c in r.get("covers", {}).items()]
            if "redei" in r:
                parts.append(f"redei:{r['redei']['verdict']}")
            if "error" in r:
                parts.append(r["error"])
            lines.append(f"{r['name']:<14} {r['status']:<10} " + " ".join(parts))
        for r in result["representations"]:
            if "euler" in r:
                detail = f"euler {r['euler']['euler']}"
            elif "error" in r:
                detail = r["error"]
            elif "error" in r.get("certify", {}):
                detail = r["certify"]["error"]
            else:
                c = r["certify"]
                detail = f"euler {c['euler']}, certificate {c['verdict']}, oracle {c['oracle']}"
            lines.append(f"{r['name']:<20} {r['status']:<10} {detail}")
        s = result["summary"]
        lines.append(
            f"{s['links']} links, {s['representations']} representations, "
            f"{len(s['violations'])} violations, {len(s['errors'])} errors"
        )
        for name in s["violations"]:
            lines.append(f"VIOLATION in {name}")
        for name in s["errors"]:
            lines.append(f"error in {name}")
    return "\n".join(lines) + "\n"


# argument handling --------------------------------------------------------


def _prime(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hakenlab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"hakenlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("euler", "Euler number of a surface-group representation")
    p.add_argument("file")
    p.add_argument("--double", action="store_true", help="double the pairs first")

    p = add("certify", "free-discreteness certificate and ping-pong oracle")
    p.add_argument("file")

    p = add("twist", "discrete Goldman twist and the numeric twist flow")
    p.add_argument("file")
    p.add_argument("--kappa", type=int, default=1)
    p.add_argument("--time", type=float, default=1.0)
    p.add_argument("--double", action="store_true", help="double the pairs first")

    p = add("cover", "homology of the p-fold cyclic branched cover")
    p.add_argument("file", nargs="?", help="link corpus (default: bundled)")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--name", help="only this record")

    p = add("redei", "linking-parity check on double branched covers")
    p.add_argument("file", nargs="?", help="link corpus (default: bundled)")
    p.add_argument("--name", help="only this record")

    p = add("haken", "homology threshold for virtual Hakenness")
    p.add_argument("file", nargs="?", help="link corpus; needs --name")
    p.add_argument("--name")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--q", type=_prime, default=3)
    p.add_argument("--chiF", type=int)
    p.add_argument("--P", type=int)
    p.add_argument("--dim", type=int)

    p = add("corpus", "every check over a data directory")
    p.add_argument("dir", nargs="?", help="directory with links.json and reps/ (default: bundled)")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _records(args) -> list:
    path = Path(args.file) if args.file else Path(str(data_path("links.json")))
    records = load_corpus(path)
    if args.name:
        records = [r for r in records if r.name == args.name]
        if not records:
            raise ParseError(f"no record named {args.name!r} in {path.name}")
    return records


def _surface(path: str, double: bool) -> SurfaceTuple:
    pairs = load_representation(path)
    return double_tuple(PairSystem(pairs)) if double else SurfaceTuple(pairs)


def run(args, seed: int):
    """``(report, failed)`` for one subcommand."""
    cmd = args.command
    if cmd == "euler":
        result = euler_report(_surface(args.file, args.double), seed)
        bad = result["status"] != "PASS"
    elif cmd == "certify":
        result = certify_report(PairSystem(load_representation(args.file)))
        bad = result["status"] != "PASS"
    elif cmd == "twist":
        result = twist_report(_surface(args.file, args.double), args.kappa, args.time)
        bad = result["status"] != "PASS"
    elif cmd == "cover":
        result = []
        for rec in _records(args):
            try:
                result.append(cover_report(rec, args.p))
            except MissingData as exc:
                if args.name:
                    raise
                result.append({"name": rec.name, "status": "N/A", "reasons": [str(exc)]})
        bad = any(r["status"] == "FAIL" for r in result)
    elif cmd == "redei":
        records = [r for r in _records(args) if r.components == 2 or args.name]
        result = [redei_check(r).to_json() for r in records]
        bad = any(r["verdict"] == "VIOLATION" for r in result)
    elif cmd == "haken":
        if args.file or args.name:
            if not args.name:
                raise ParseError("haken with a corpus file needs --name")
            result = [haken_record_report(r, args.p, args.q, args.dim) for r in _records(args)]
        else:
            missing = [f"--{k}" for k in ("chiF", "P", "dim") if getattr(args, k) is None]
            if missing:
                raise ParseError("haken needs " + ", ".join(missing) + " (or a corpus and --name)")
            bp = BranchProfile(args.p, args.q, args.chiF, args.P, args.dim)
            result = [haken_threshold(bp).to_json()]
        bad = False
    else:
        root = Path(args.dir) if args.dir else Path(str(data_path()))
        if not root.exists():
            raise ParseError(f"{root} does not exist")
        result = corpus_report(root, max(1, args.jobs), seed)
        bad = bool(result["summary"]["violations"] or result["summary"]["errors"])
    return result, bad


def _source_name(args) -> str | None:
    for key in ("file", "dir"):
        value = getattr(args, key, None)
        if value:
            return Path(value).name
    return None


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        seed = seed_from_env()
        result, bad = run(args, seed)
    except (PresentationMismatch, ArithmeticError) as exc:
        print(f"hakenlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except RelationViolated as exc:
        print(f"hakenlab: RelationViolated: {exc}", file=sys.stderr)
        print(f"residual product: {_residual_text(exc.residual)}", file=sys.stderr)
        return EXIT_INPUT
    except (HakenlabError, ValueError, OSError) as exc:
        print(f"hakenlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        envelope = {
            "meta": {
                "tool": "hakenlab",
                "version": __version__,
                "command": args.command,
                "input": _source_name(args),
                "seed": seed,
            },
            "result": result,
        }
        sys.stdout.write(dumps_stable(envelope))
    else:
        sys.stdout.write(render_text(args.command, result))
    if bad:
        if args.command == "corpus":
            for name in result["summary"]["violations"] + result["summary"]["errors"]:
                print(f"hakenlab: check failed for record {name}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
