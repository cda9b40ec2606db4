"""Compare the compiled orbit kernels with the pure-Python fallback.

Run from the repository root:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from dimdata import _kernels_py
from dimdata.rootsys import build
from dimdata.subsystems import named_subsystem
from dimdata.weyl import SymmetrySpec, _phi_gens

try:
    from dimdata import _kernels
except ImportError:  # pragma: no cover
    _kernels = None

CASES = [
    ("F4", "B4"),
    ("E6", "A5+A1"),
    ("E7", "A4+A2"),
    ("E8", "2A4"),
    ("E8", "A6"),
]


def _args(parent: str, name: str):
    phi = named_subsystem(name, parent)
    P = phi.parent
    gr, gc = _phi_gens(phi)
    D = phi.two_delta_labels()
    perms = list(SymmetrySpec.weyl(P).outer)
    return D, gr, gc, P.cartan, perms


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args(argv)
    backends = [("python", _kernels_py)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{'case':<16}{'kernel':<14}" + "".join(f"{b:>12}" for b, _ in backends) + f"{'speedup':>10}")
    for parent, name in CASES:
        D, gr, gc, cart, perms = _args(parent, name)
        jobs = {
            "f_character": lambda K: K.f_character(D, gr, gc, cart, perms, 10**8),
            "signed_orbit": lambda K: K.signed_orbit(D, gr, gc, 10**8),
        }
        for kname, job in jobs.items():
            times = [_time(lambda: job(K), a.repeat) for _, K in backends]
            ref = job(backends[0][1])
            for _, K in backends[1:]:
                got = job(K)
                if sorted(got.items() if isinstance(got, dict) else got) != sorted(
                    ref.items() if isinstance(ref, dict) else ref
                ):
                    raise SystemExit(f"backends disagree on {parent}:{name} {kname}")
            sp = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
            print(f"{parent + ':' + name:<16}{kname:<14}" + "".join(f"{t:>11.4f}s" for t in times) + f"{sp:>10}")
    P = build("E8")
    mus = [tuple((-1) ** (i + j) * (i + 2 * j) for i in range(8)) for j in range(200)]
    times = [_time(lambda: [K.dominant(m, P.cartan) for m in mus], a.repeat) for _, K in backends]
    sp = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
    print(f"{'E8 x200':<16}{'dominant':<14}" + "".join(f"{t:>11.4f}s" for t in times) + f"{sp:>10}")


if __name__ == "__main__":
    main()
