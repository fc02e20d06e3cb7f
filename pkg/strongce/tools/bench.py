"""Corpus writer and benchmark harness for the strong list colorer"""
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from pathlib import Path
from typing import Any, Dict, List, Optional

from strongce.core.coloring import verify_strong
from strongce.engine.engine import strong_list_color
from strongce.errors import FormatError, StrongceError
from strongce.tools.formats import read_graph, read_lists, serialize_graph, serialize_lists, write_text
from strongce.tools.generators import generate_corpus
from strongce.utils.logger import get_logger

logger = get_logger("bench")

GRAPH_SUFFIX = ".graph"
LISTS_SUFFIX = ".lists"


@dataclass
class InstanceResult:
    """Outcome of coloring one corpus instance"""
    name: str
    success: bool
    handler: str = "none"
    fallback_depth: int = -1
    runtime: float = 0.0
    edges: int = 0
    error: Optional[str] = None
    parse_failure: bool = False


@dataclass
class BenchReport:
    instances: List[InstanceResult] = field(default_factory=list)

    @property
    def succeeded(self) -> int:
        return sum(1 for result in self.instances if result.success)

    @property
    def success_rate(self) -> float:
        return self.succeeded / len(self.instances) if self.instances else 1.0

    @property
    def max_fallback_depth(self) -> int:
        return max((r.fallback_depth for r in self.instances if r.success), default=0)

    @property
    def ok(self) -> bool:
        return all(result.success for result in self.instances)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "summary": {
                "instances": len(self.instances),
                "succeeded": self.succeeded,
                "success_rate": self.success_rate,
                "parse_failures": sum(1 for r in self.instances if r.parse_failure),
                "max_fallback_depth": self.max_fallback_depth,
                "total_runtime": round(sum(r.runtime for r in self.instances), 6),
            },
            "instances": [asdict(result) for result in self.instances],
        }

    def table(self) -> str:
        rows = [f"{'instance':<28} {'edges':>5} {'handler':<24} {'depth':>5} {'seconds':>8}  status"]
        for r in self.instances:
            status = "ok" if r.success else f"FAILED: {r.error}"
            rows.append(f"{r.name:<28} {r.edges:>5} {r.handler:<24} {r.fallback_depth:>5} {r.runtime:>8.3f}  {status}")
        rows.append(f"success {self.succeeded}/{len(self.instances)} ({100 * self.success_rate:.1f}%), "
                    f"max fallback depth {self.max_fallback_depth}")
        return "\n".join(rows)


def write_corpus(out_dir: Path, count: int, seed: int) -> List[str]:
    """Write `count` seeded instances as <name>.graph / <name>.lists pairs"""
    names = []
    for name, graph, lists in generate_corpus(count, seed):
        write_text(out_dir / f"{name}{GRAPH_SUFFIX}", serialize_graph(graph))
        write_text(out_dir / f"{name}{LISTS_SUFFIX}", serialize_lists(lists))
        names.append(name)
    logger.info(f"wrote {len(names)} instances to {out_dir}")
    return names


def run_instance(graph_path: str, seed: Optional[int] = None) -> InstanceResult:
    """Color one instance; never raises"""
    path = Path(graph_path)
    name = path.name[: -len(GRAPH_SUFFIX)]
    try:
        graph = read_graph(path)
        lists = read_lists(path.with_name(f"{name}{LISTS_SUFFIX}"), graph.edge_count)
    except (FormatError, OSError) as exc:
        return InstanceResult(name, False, error=f"parse failure: {exc}", parse_failure=True)

    start = time.perf_counter()
    try:
        outcome = strong_list_color(graph, lists, seed=seed)
        report = verify_strong(graph, lists, outcome.coloring)
        if not report.ok:
            return InstanceResult(name, False, outcome.handler, outcome.fallback_depth,
                                  time.perf_counter() - start, graph.edge_count, f"invalid: {report.describe()}")
    except StrongceError as exc:
        return InstanceResult(name, False, runtime=time.perf_counter() - start, edges=graph.edge_count,
                              error=f"{type(exc).__name__}: {exc}")
    return InstanceResult(name, True, outcome.handler, outcome.fallback_depth,
                          time.perf_counter() - start, graph.edge_count)


def run_bench(corpus_dir: Path, workers: int = 1, seed: Optional[int] = None) -> BenchReport:
    """Color every <name>.graph in `corpus_dir`; the report keeps sorted input order"""
    paths = sorted(str(p) for p in Path(corpus_dir).glob(f"*{GRAPH_SUFFIX}"))
    logger.info(f"benchmarking {len(paths)} instances with {workers} worker(s)")
    if workers > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(partial(run_instance, seed=seed), paths))
    else:
        results = [run_instance(p, seed) for p in paths]
    report = BenchReport(results)
    for result in results:
        if not result.success:
            logger.error(f"{result.name}: {result.error}")
    return report


def save_report(report: BenchReport, out_path: Path) -> None:
    write_text(out_path, json.dumps(report.to_dict(), indent=2) + "\n")
