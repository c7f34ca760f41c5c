"""Compare the compiled kernel against the pure-Python fallback.

Micro benchmarks call both kernels on the same flat dictionaries; the
end-to-end benchmark times one verification criterion in a subprocess with
and without ``QSPHERE_PURE_PYTHON``.

    python3 benchmarks/bench_kernel.py [--repeat 5] [--criterion 5]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from qsphere import _kernel_py
from qsphere.algebra import A, AS, C, CS, ONE

try:
    from qsphere import _kernel as _compiled
except ImportError:
    _compiled = None


def random_flat(rng, n_terms, max_deg):
    out = {}
    for _ in range(n_terms):
        k = rng.randint(-max_deg, max_deg)
        m = rng.randint(0, max_deg - abs(k))
        n = rng.randint(0, max_deg - abs(k) - m)
        key = (k, m, n, rng.randint(-8, 8))
        out[key] = out.get(key, 0) + rng.choice((-3, -1, 1, 2, 5))
    return out


def element_workload():
    f = (A + C).scale(2) + CS * AS + ONE
    g = f
    for _ in range(5):
        g = g * f
    return g.star() * g


def micro(impl, t1, t2, images):
    impl.mul_flat(t1, t2, 60)
    impl.star_flat(t1)
    impl.kshift(t1, 3, -1, 1, -1)
    impl.apply_images(t1, images)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--criterion", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(7)
    t1, t2 = random_flat(rng, 60, 8), random_flat(rng, 60, 8)
    images = {(k, m, n): {(k, m + 1, n, 1): 1, (-k, n, m, 0): -2} for (k, m, n, _e) in t1}

    impls = [("python", _kernel_py)] + ([("cython", _compiled)] if _compiled else [])
    if _compiled and _compiled.mul_flat(t1, t2, 60) != _kernel_py.mul_flat(t1, t2, 60):
        sys.exit("backends disagree on mul_flat")

    print(f"{'benchmark':34} {'backend':8} {'best of ' + str(args.repeat):>12}")
    base = {}
    for name, impl in impls:
        best = min(timeit.repeat(lambda: micro(impl, t1, t2, images), number=20, repeat=args.repeat)) / 20
        base.setdefault("micro", best)
        print(f"{'kernel calls (60x60 terms)':34} {name:8} {best * 1e3:10.3f} ms  x{base['micro'] / best:.2f}")

    code = f"from qsphere import verify; verify.run_criterion({args.criterion})"
    code_el = ("import sys; sys.path.insert(0, %r); import bench_kernel as b; b.element_workload()"
               % os.path.dirname(os.path.abspath(__file__)))
    for label, snippet in ((f"criterion {args.criterion} end to end", code), ("element powers", code_el)):
        ref = None
        for name, env_val in (("python", "1"), ("cython", "0")):
            if name == "cython" and _compiled is None:
                continue
            env = dict(os.environ, QSPHERE_PURE_PYTHON=env_val)
            stmt = f"subprocess.run([sys.executable, '-c', {snippet!r}], env=env, check=True)"
            best = min(timeit.repeat(stmt, globals={"subprocess": subprocess, "sys": sys, "env": env},
                                     number=1, repeat=max(1, args.repeat // 2)))
            ref = ref or best
            print(f"{label:34} {name:8} {best:10.3f} s   x{ref / best:.2f}")


if __name__ == "__main__":
    main()
