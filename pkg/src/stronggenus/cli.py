"""Command line entry point: ``stronggenus <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import bounds as bounds_mod
from ._accel import backend
from .embedding import (
    euler_characteristic,
    facial_distance,
    format_embedding,
    is_polyhedral,
    parse_embedding,
    random_rotation,
    surface_of,
)
from .errors import StrongGenusError
from .families import hex_cylinder, k33
from .graph import format_graph, girth, is_cubic, is_subdivision_of_3connected, parse_graph
from .planarity import (
    NonPlanar,
    format_certificate,
    planar_embedding,
    prop1_certificate,
    verify_certificate,
)
from .search import AboveCap, SearchResult, default_threads, min_genus, strong_genus


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str | None = None):
    if args.format == "text":
        if text is None:
            text = "\n".join(f"{k}: {v}" for k, v in payload.items())
        print(text)
    else:
        print(json.dumps(payload, indent=2, sort_keys=False))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _vertex(g, label: str) -> int:
    v = int(label) - 1
    if not 0 <= v < g.n:
        raise UsageError(f"vertex {label} out of range")
    return v


def _out_dir(args) -> Path:
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    return out


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    out = _out_dir(args)
    if args.family == "k33":
        g = k33()
        path = out / "k33.graph"
        path.write_text(format_graph(g))
        _emit(args, {"family": "k33", "files": {"graph": str(path)}})
        return 0
    if args.rings is None:
        raise UsageError("--rings is required for the hex family")
    inst = hex_cylinder(args.rings)
    stem = f"hex{args.rings}"
    files = {
        "graph": out / f"{stem}.graph",
        "planar": out / f"{stem}_planar.emb",
        "toroidal": out / f"{stem}_torus.emb",
        "certificate": out / f"{stem}.cert",
    }
    files["graph"].write_text(format_graph(inst.graph))
    files["planar"].write_text(format_embedding(inst.reference_planar))
    files["toroidal"].write_text(format_embedding(inst.reference_toroidal))
    files["certificate"].write_text(format_certificate(inst.reference_rings))
    _emit(
        args,
        {
            "family": "hex",
            "rings": args.rings,
            "n": inst.graph.n,
            "m": inst.graph.m,
            "x": inst.x + 1,
            "y": inst.y + 1,
            "planarizing_edge": inst.planarizing_edge + 1,
            "files": {k: str(v) for k, v in files.items()},
        },
    )
    return 0


def cmd_faces(args) -> int:
    e = parse_embedding(_read(args.embedding))
    faces = [[v + 1 for v in f.vertex_sequence] for f in e.faces]
    payload = {"faces": faces, "count": len(faces), "euler_characteristic": euler_characteristic(e)}
    text = "\n".join("f " + " ".join(map(str, f)) for f in faces)
    _emit(args, payload, text)
    return 0


def cmd_genus(args) -> int:
    e = parse_embedding(_read(args.embedding))
    s = surface_of(e)
    _emit(args, {"orientable": s.orientable, "genus": s.genus, "euler_characteristic": euler_characteristic(e)})
    return 0


def cmd_strong_check(args) -> int:
    e = parse_embedding(_read(args.embedding))
    bad = [[v + 1 for v in f.vertex_sequence] for f in e.faces if not f.is_cycle]
    _emit(args, {"strong": not bad, "non_cycle_faces": bad})
    return 0


def cmd_polyhedral_check(args) -> int:
    e = parse_embedding(_read(args.embedding))
    _emit(args, {"polyhedral": is_polyhedral(e)})
    return 0


def cmd_fdist(args) -> int:
    e = parse_embedding(_read(args.embedding))
    x, y = _vertex(e.graph, args.x), _vertex(e.graph, args.y)
    q = facial_distance(e, x, y)
    _emit(args, {"x": x + 1, "y": y + 1, "facial_distance": q}, str(q))
    return 0


def cmd_prop1_cert(args) -> int:
    e = parse_embedding(_read(args.embedding))
    x, y = _vertex(e.graph, args.x), _vertex(e.graph, args.y)
    cert = prop1_certificate(e, x, y)
    payload = {
        "x": x + 1,
        "y": y + 1,
        "r": cert.r,
        "cycles": [[v + 1 for v in c] for c in cert.cycles],
        "verified": verify_certificate(e.graph, cert, e),
    }
    if args.out:
        path = _out_dir(args) / "prop1.cert"
        path.write_text(format_certificate(cert))
        payload["certificate_file"] = str(path)
    _emit(args, payload, format_certificate(cert).rstrip("\n"))
    return 0


def _search_payload(args, res: SearchResult, stem: str) -> dict:
    payload = res.as_dict()
    payload["witness_file"] = None
    if res.witness is not None and args.out:
        path = _out_dir(args) / f"{stem}_{res.quantity}.emb"
        path.write_text(format_embedding(res.witness))
        payload["witness_file"] = str(path)
    payload["elapsed"] = round(res.elapsed, 3)
    return payload


def cmd_search(args) -> int:
    g = parse_graph(_read(args.graph))
    fn = strong_genus if args.command == "sg-search" else min_genus
    res = fn(g, args.cap, threads=args.threads, timeout=args.timeout, prune=not args.no_prune)
    _emit(args, _search_payload(args, res, Path(args.graph).stem))
    return 0


def cmd_bounds(args) -> int:
    rep = bounds_mod.bounds_report(args.n, args.m, args.girth, args.q)
    _emit(args, rep.as_dict())
    return 0


def run_verification(rings: int, cap: int, threads: int, timeout: float | None, seed: int | None) -> dict:
    """Full near-planar pipeline for ``hex_cylinder(rings)``."""
    timings: dict[str, float] = {}
    t = time.perf_counter()
    inst = hex_cylinder(rings)
    g = inst.graph
    base = g.delete_edge(inst.planarizing_edge)
    timings["build"] = time.perf_counter() - t

    t = time.perf_counter()
    full_planar = planar_embedding(g)
    base_planar = planar_embedding(base)
    torus = surface_of(inst.reference_toroidal)
    gamma = 0 if full_planar is not NonPlanar else (1 if torus.orientable and torus.genus == 1 else None)
    timings["genus"] = time.perf_counter() - t

    t = time.perf_counter()
    q = facial_distance(inst.reference_planar, inst.x, inst.y)
    cert = prop1_certificate(inst.reference_planar, inst.x, inst.y)
    cert_ok = verify_certificate(base, cert, inst.reference_planar)
    timings["certificate"] = time.perf_counter() - t
    thm1 = bounds_mod.thm1_bound(q)
    hypothesis = is_subdivision_of_3connected(base)

    t = time.perf_counter()
    res = strong_genus(g, cap, threads=threads, timeout=timeout)
    timings["search"] = time.perf_counter() - t
    search_bound = None
    if res.exhaustive:
        search_bound = cap + 1 if res.value is AboveCap else res.value
    if search_bound is not None and search_bound >= (thm1 if hypothesis else 0):
        sg_lower, method = search_bound, "search-bnb"
    elif hypothesis:
        sg_lower, method = thm1, "thm1-bound"
    else:
        sg_lower, method = search_bound or 0, "search-bnb"

    checks = {
        "cubic": is_cubic(g),
        "near_planar": base_planar is not NonPlanar,
        "nonplanar": full_planar is NonPlanar,
        "toroidal_reference_chi0": euler_characteristic(inst.reference_toroidal) == 0,
        "subdivision_of_3connected": hypothesis,
        "certificate_verified": cert_ok,
        "reference_rings_verified": verify_certificate(base, inst.reference_rings, inst.reference_planar),
        "facial_distance_is_rings_plus_1": q == rings + 1,
        "certificate_size_is_q_minus_1": cert.r == q - 1,
        "search_consistent_with_thm1": search_bound is None or not hypothesis or search_bound >= thm1,
    }
    if seed is not None:
        rng = np.random.default_rng(seed)
        ok = True
        for _ in range(200):
            e = random_rotation(g, rng)
            chi = euler_characteristic(e)
            ok &= sum(f.length for f in e.faces) == 2 * g.m and chi % 2 == 0
            ok &= surface_of(e).genus <= bounds_mod.max_genus_ub(g.n, g.m)
        checks["random_rotation_invariants"] = bool(ok)

    return {
        "instance": f"hex_cylinder({rings})",
        "n": g.n,
        "m": g.m,
        "girth": girth(g),
        "gamma": gamma,
        "q": q,
        "thm1_bound": thm1,
        "sg_lower": sg_lower,
        "sg_lower_method": method,
        "search": res.as_dict(),
        "certificate": {
            "r": cert.r,
            "cycle_lengths": [len(c) for c in cert.cycles],
            "cycles": [[v + 1 for v in c] for c in cert.cycles],
        },
        "checks": checks,
        "counterexample": gamma is not None and sg_lower > gamma,
        "config": {"rings": rings, "cap": cap, "threads": threads, "timeout": timeout, "seed": seed, "backend": backend()},
        "timings": {k: round(v, 4) for k, v in timings.items()},
    }


def cmd_verify(args) -> int:
    if args.family != "hex":
        raise UsageError("verify supports --family hex")
    if args.rings is None:
        raise UsageError("--rings is required")
    cap = 1 if args.cap is None else args.cap
    report = run_verification(args.rings, cap, args.threads, args.timeout, args.seed)
    if args.out:
        (_out_dir(args) / f"verify_hex{args.rings}.json").write_text(json.dumps(report, indent=2) + "\n")
    if args.format == "text":
        lines = [
            f"instance        {report['instance']}  (n={report['n']}, m={report['m']})",
            f"genus           {report['gamma']}",
            f"facial distance {report['q']}",
            f"thm1 bound      {report['thm1_bound']}",
            f"sg lower bound  {report['sg_lower']}  [{report['sg_lower_method']}]",
            f"counterexample  {report['counterexample']}",
        ]
        lines += [f"  {'PASS' if ok else 'FAIL'}  {name}" for name, ok in report["checks"].items()]
        print("\n".join(lines))
    else:
        print(json.dumps(report, indent=2))
    expected = report["thm1_bound"] > (report["gamma"] or 0)
    if not all(report["checks"].values()) or (expected and not report["counterexample"]):
        return 1
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cap", type=int, default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--timeout", type=float, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", default=None)

    parser = argparse.ArgumentParser(prog="stronggenus", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a family instance")
    p.add_argument("--family", choices=("hex", "k33"), required=True)
    p.add_argument("--rings", type=int)
    p.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("faces", cmd_faces, "list facial walks"),
        ("genus", cmd_genus, "surface of an embedding"),
        ("strong-check", cmd_strong_check, "are all faces cycles"),
        ("polyhedral-check", cmd_polyhedral_check, "are all faces induced nonseparating cycles"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("embedding")
        p.set_defaults(func=func)

    for name, func in (("fdist", cmd_fdist), ("prop1-cert", cmd_prop1_cert)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("embedding")
        p.add_argument("x")
        p.add_argument("y")
        p.set_defaults(func=func)

    for name in ("sg-search", "min-genus"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("graph")
        p.add_argument("--no-prune", action="store_true")
        p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", parents=[common])
    p.add_argument("--girth", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--family", choices=("hex",), default="hex")
    p.add_argument("--rings", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is None:
        args.threads = default_threads()
    try:
        return args.func(args)
    except (UsageError, StrongGenusError, ValueError) as exc:
        print(f"stronggenus: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
