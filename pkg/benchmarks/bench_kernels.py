"""Compare the compiled and pure-Python polynomial kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--solve]

Kernel timings use identical random Fraction inputs for both backends.
``--solve`` also times the end-to-end solver on the bundled order-2
example in a subprocess per backend.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction
from pathlib import Path

from holorec import _pykernels

try:
    from holorec import _ckernels
except ImportError:
    _ckernels = None

ROOT = Path(__file__).resolve().parents[1]


def _poly(rng, deg, height=10**6):
    return [Fraction(rng.randint(-height, height), rng.randint(1, 50)) for _ in range(deg + 1)]


def cases(rng):
    a, b = _poly(rng, 60), _poly(rng, 40)
    big = _poly(rng, 120)
    ints = [rng.randint(-10**9, 10**9) for _ in range(40)]
    return {
        "mul 60x40": ("mul", (a, b)),
        "divmod 120/40": ("divmod_", (big, b)),
        "taylor_shift deg 60": ("taylor_shift", (a, Fraction(3))),
        "horner deg 120": ("horner", (big, Fraction(7, 3))),
        "roots_mod_p deg 40, p=1009": ("roots_mod_p", (ints, 1009)),
    }


def bench(repeat):
    rng = random.Random(1)
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name, _ in backends) + "   speedup")
    for label, (fn, args) in cases(rng).items():
        times = []
        for _, mod in backends:
            f = getattr(mod, fn)
            t = min(timeit.repeat(lambda: f(*args), number=5, repeat=repeat)) / 5
            times.append(t)
        ref = [getattr(mod, fn)(*args) for _, mod in backends]
        if any(r != ref[0] for r in ref):
            raise SystemExit(f"backend mismatch on {label}")
        speed = f"{times[0] / times[1]:8.2f}x" if len(times) > 1 else "      n/a"
        print(f"{label:32s}" + "".join(f"{t * 1e3:10.3f}ms" for t in times) + "  " + speed)
    if not _ckernels:
        print("compiled kernels not built; only the Python backend was timed")


def bench_solve():
    src = ROOT / "tests" / "data" / "order2_large.txt"
    code = ("import time,holorec.kernels as k;from holorec.parser import parse_recurrence;"
            "from holorec.solver import hypergeometric_solutions;"
            f"r=parse_recurrence(open({str(src)!r}).read());t=time.perf_counter();"
            "b=hypergeometric_solutions(r,'q').basis;"
            "print(k.BACKEND, len(b), f'{time.perf_counter()-t:.3f}s')")
    for pure in ("1", "0"):
        env = dict(os.environ, HOLOREC_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
        print("solve order2_large:", out.stdout.strip() or out.stderr.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--solve", action="store_true")
    args = ap.parse_args()
    bench(args.repeat)
    if args.solve:
        bench_solve()


if __name__ == "__main__":
    main()
