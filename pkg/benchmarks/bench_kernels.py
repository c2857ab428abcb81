"""Time the hot kernels with numba and with the plain-Python fallback.

Each backend runs in its own interpreter because the switch is read at
import time (``STRONGGENUS_NO_NUMBA``).  Numba timings exclude the first
call, which compiles or loads the cache.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _best(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def worker(repeat: int) -> dict:
    from stronggenus import _kernels
    from stronggenus._accel import backend
    from stronggenus.families import complete_graph, hex_cylinder, petersen
    from stronggenus.search import enumerate_succ, strong_genus, min_genus

    batches = {name: list(enumerate_succ(g)) for name, g in (("K5", complete_graph(5)), ("petersen", petersen()))}

    def faces(name):
        return lambda: [_kernels.count_faces_batch(b) for b in batches[name]]

    cases = {
        "face_count K5 (7776 rotations)": faces("K5"),
        "face_count Petersen (1024 rotations)": faces("petersen"),
        "min_genus Petersen": lambda: min_genus(petersen(), threads=1),
        "strong_genus hex_cylinder(3) cap 1": lambda: strong_genus(hex_cylinder(3).graph, 1, threads=1),
        "strong_genus hex_cylinder(4) cap 1": lambda: strong_genus(hex_cylinder(4).graph, 1, threads=1),
    }
    out = {"backend": backend(), "seconds": {}}
    for name, fn in cases.items():
        fn()  # warm-up: compile / load cache
        out["seconds"][name] = _best(fn, repeat)
    return out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", default=None, help="write the raw timings here")
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.worker:
        print(json.dumps(worker(args.repeat)))
        return 0

    runs = {}
    for flag in ("0", "1"):
        env = dict(os.environ, STRONGGENUS_NO_NUMBA=flag)
        proc = subprocess.run(
            [sys.executable, __file__, "--worker", "--repeat", str(args.repeat)],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        res = json.loads(proc.stdout)
        runs[res["backend"]] = res["seconds"]

    width = max(len(k) for k in runs["numba"])
    print(f"{'case':<{width}}  {'numba [s]':>10}  {'python [s]':>10}  {'speedup':>8}")
    for case, fast in runs["numba"].items():
        slow = runs["python"][case]
        print(f"{case:<{width}}  {fast:>10.4f}  {slow:>10.4f}  {slow / fast:>7.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(runs, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
