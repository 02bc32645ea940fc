"""Timing harness: every timed run is verified before it is recorded."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .algorithms import Forest, perfect_forest_edge, perfect_forest_split
from .generators import random_connected
from .graph import Graph, GraphError, OddOrderError

ALGORITHMS: dict[str, Callable[[Graph], Forest]] = {
    "split": perfect_forest_split,
    "edge": perfect_forest_edge,
}


class VerificationFailure(RuntimeError):
    """An algorithm returned something that is not a perfect forest."""


@dataclass
class BenchRecord:
    algorithm: str
    n: int
    m: int
    seed: int
    wall_time_ms: float
    forest_component_count: int
    verified: bool


@dataclass
class BenchReport:
    records: list[BenchRecord] = field(default_factory=list)

    def medians(self) -> list[dict]:
        groups: dict[tuple[str, int, int], list[float]] = {}
        for r in self.records:
            groups.setdefault((r.algorithm, r.n, r.m), []).append(r.wall_time_ms)
        return [
            {"algorithm": alg, "n": n, "m": m, "median_ms": statistics.median(times)}
            for (alg, n, m), times in groups.items()
        ]

    def to_dict(self) -> dict:
        return {"records": [asdict(r) for r in self.records], "medians": self.medians()}


def check_sizes(sizes: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    out = []
    for n, m in sizes:
        if n < 2 or n % 2:
            raise OddOrderError(f"benchmark size n={n}: odd number of vertices")
        if not n - 1 <= m <= n * (n - 1) // 2:
            raise GraphError(f"benchmark size (n={n}, m={m}): m out of range")
        out.append((n, m))
    return out


def run_bench(sizes: Iterable[tuple[int, int]], reps: int = 3, seed: int = 0,
              algorithms: Iterable[str] = ("split", "edge")) -> BenchReport:
    sizes = check_sizes(sizes)
    if reps < 1:
        raise GraphError(f"reps must be positive, got {reps}")
    algorithms = list(algorithms)
    schedule = random.Random(seed)
    report = BenchReport()
    for n, m in sizes:
        for _ in range(reps):
            case_seed = schedule.getrandbits(63)
            g = random_connected(n, m, case_seed)
            for name in algorithms:
                start = time.perf_counter()
                forest = ALGORITHMS[name](g)
                elapsed = (time.perf_counter() - start) * 1000.0
                verdict = forest.verify()
                if not verdict.valid:
                    raise VerificationFailure(
                        f"{name} on random_connected({n}, {m}, seed={case_seed}): "
                        f"{verdict.violations[:5]}"
                    )
                report.records.append(
                    BenchRecord(name, n, m, case_seed, elapsed, len(forest.components), True)
                )
    return report
