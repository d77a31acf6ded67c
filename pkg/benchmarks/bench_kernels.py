"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Both modules are imported directly, so the environment switch
HYP_PURE_PYTHON does not matter here.  Each kernel is timed on the same
inputs for both backends and the results are checked to agree.
"""

import argparse
import random
import sys
import timeit

from hypcone import _pykernels
from hypcone.polycore import poly_parse

try:
    from hypcone import _ckernels
except ImportError:
    _ckernels = None

QUARTIC = ("x1^4 - 8*x1^2*x2^2 + 3*x1^2*x2*x3 - 4*x1^2*x3^2 + x1*x2^3 + x1*x2^2*x3 + 4*x1*x2*x3^2"
           " + 12*x2^4 - 13*x2^3*x3 + x2^2*x3^2 - 2*x2*x3^3 + 2*x3^4")


def random_polys(rng, count, deg, bound):
    out = []
    for _ in range(count):
        coeffs = [rng.randint(-bound, bound) for _ in range(deg)]
        coeffs.append(rng.choice([c for c in range(-bound, bound + 1) if c]))
        out.append(coeffs)
    return out


def workloads(seed):
    rng = random.Random(seed)
    polys = random_polys(rng, 200, 8, 20)
    big = random_polys(rng, 20, 16, 10**6)
    h = poly_parse(QUARTIC, 3)
    monos = [(exps, int(c)) for exps, c in h.terms.items()]
    lines = [([rng.randint(-9, 9) for _ in range(3)], [rng.randint(-9, 9) for _ in range(3)]) for _ in range(200)]
    return {
        "sturm_chain deg 8": (lambda k: [k.sturm_chain(p) for p in polys]),
        "sturm_chain deg 16": (lambda k: [k.sturm_chain(p) for p in big]),
        "real_root_profile deg 8": (lambda k: [k.real_root_profile(p) for p in polys]),
        "eval_hom deg 8": (lambda k: [k.eval_hom(p, 355, 113) for p in polys]),
        "restrict_line quartic": (lambda k: [k.restrict_line(monos, e, v, 4) for e, v in lines]),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; run: pip install -e . --no-build-isolation", file=sys.stderr)
        return 1
    print(f"{'kernel':<26}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in workloads(args.seed).items():
        if fn(_pykernels) != fn(_ckernels):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<26}{py:>12.2f}{cy:>12.2f}{py / cy:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
