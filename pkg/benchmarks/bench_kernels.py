"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload enumerates a corpus automaton up to a bound; both backends
must return identical samples, and the best of ``--repeat`` runs is
reported.
"""

import argparse
import time

from jumpfa import _kernel, corpus
from jumpfa.core import ModelKind
from jumpfa.engine import enumerate_language
from jumpfa.transforms import import_dfa

WORKLOADS = [
    ("shared_c_ab", ModelKind.GRC, 8),
    ("shared_c_ab", ModelKind.GRL, 8),
    ("shared_c_ab", ModelKind.GJFA, 8),
    ("equal_counts", ModelKind.GRC, 12),
    ("dyck_rule", ModelKind.GRL, 12),
    ("l_c", ModelKind.GLC, 9),
    ("l_ab", ModelKind.GRC, 12),
    ("dfa:astar_bstar", ModelKind.ROWJ, 12),
]


def load(name):
    if name.startswith("dfa:"):
        return import_dfa(corpus.load_dfa(name[4:]))
    return corpus.load(name)


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    backends = sorted(_kernel.BACKENDS)
    if "cython" not in backends:
        print("compiled kernel not built; only the python backend is available")
    header = f"{'workload':<28}{'words':>8}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    totals = dict.fromkeys(backends, 0.0)
    for name, model, bound in WORKLOADS:
        automaton = load(name)
        row, samples = {}, {}
        for b in backends:
            row[b], samples[b] = best_of(
                args.repeat, lambda: enumerate_language(automaton, model, bound, backend=b)
            )
            totals[b] += row[b]
        if len({s.words for s in samples.values()}) != 1:
            raise SystemExit(f"backends disagree on {name} under {model}")
        line = f"{f'{name} {model} n={bound}':<28}{len(samples[backends[0]]):>8}"
        line += "".join(f"{row[b] * 1000:>10.1f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{row['python'] / row['cython']:>9.1f}x"
        print(line)
    line = f"{'total':<36}" + "".join(f"{totals[b] * 1000:>10.1f}ms" for b in backends)
    if len(backends) == 2:
        line += f"{totals['python'] / totals['cython']:>9.1f}x"
    print(line)


if __name__ == "__main__":
    main()
