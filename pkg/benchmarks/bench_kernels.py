"""Time the compiled expansion kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--max-weight N] [--repeat R]
"""

import argparse
import sys
import timeit

from ncsf import _pykernels
from ncsf.compositions import compositions_of

try:
    from ncsf import _ckernels
except ImportError:
    _ckernels = None

CASES = [
    ("M->Psi", "coarsening_terms", _pykernels.M_TO_PSI),
    ("F->Psi", "coarsening_terms", _pykernels.F_TO_PSI),
    ("Psi->M", "coarsening_terms", _pykernels.PSI_TO_M),
    ("S->Psi", "refinement_terms", _pykernels.S_TO_PSI),
    ("Psi->S", "refinement_terms", _pykernels.PSI_TO_S),
]


def sweep(module, fn, kind, n):
    f = getattr(module, fn)
    for I in compositions_of(n):
        f(kind, I)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'kernel':<8} {'n':>3} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n in range(4, args.max_weight + 1, 2):
        for label, fn, kind in CASES:
            # both backends must agree before their timings mean anything
            for I in compositions_of(n):
                assert getattr(_pykernels, fn)(kind, I) == getattr(_ckernels, fn)(kind, I), (label, I)
            py = min(timeit.repeat(lambda: sweep(_pykernels, fn, kind, n), number=1, repeat=args.repeat))
            cy = min(timeit.repeat(lambda: sweep(_ckernels, fn, kind, n), number=1, repeat=args.repeat))
            print(f"{label:<8} {n:>3} {py * 1e3:>10.2f} {cy * 1e3:>10.2f} {py / cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
