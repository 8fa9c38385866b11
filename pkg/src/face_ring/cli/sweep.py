"""Sweeps: every identity checked over many complexes at once."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..compress.certificate import CompressionPolicy, check_non_extendable_characterization, compress, reachable_final_faces
from ..core.event_bus import CASE_CHECKED, VIOLATION
from ..core.session import Session
from ..freeness.criteria import MAX_SEARCH_GROUND_SET, max_free_rank_real
from ..freeness.halperin_carlsson import hc_verify
from ..hochster.betti import betti_table
from ..hochster.verify import check_parity_identity, check_support_bound
from ..linalg.matrix import FieldTag
from ..oracle.cells import MAX_ORACLE_GROUND_SET
from ..oracle.validate import cross_validate
from ..simplicial.complex import SimplicialComplex, enumerate_complexes, indicator, random_complex
from .commands import describe_complex
from .job import JobConfig


logger = logging.getLogger(__name__)

# reachable_final_faces explores every compression order; keep it to small ground sets.
MAX_REACHABILITY_GROUND_SET = 4


@dataclass(frozen=True)
class CaseResult:
    complex: SimplicialComplex
    checks: Tuple[Tuple[str, bool], ...]
    free_rank: Optional[int]
    # Recorded for the report only; never a violation.
    observations: Tuple[Tuple[str, bool], ...] = ()

    @property
    def failed(self) -> List[str]:
        return [name for name, ok in self.checks if not ok]


def check_case(K: SimplicialComplex) -> CaseResult:
    """
    Run every check on one complex, over both fields.

    Module-level so worker processes can import it.
    """
    checks: List[Tuple[str, bool]] = []
    f = indicator(K)
    for field in FieldTag:
        label = field.value.lower()
        table = betti_table(K, field)
        checks.append((f"parity[{label}]", check_parity_identity(K, field, table=table).holds))
        checks.append((f"support_bound[{label}]", check_support_bound(K, field, table=table).holds))
        if K.m <= MAX_ORACLE_GROUND_SET:
            checks.append((f"oracle[{label}]", cross_validate(K, field, table=table).holds))

    for policy in CompressionPolicy:
        checks.append((f"compression[{policy.value}]", compress(f, policy).holds))
    checks.append(("non_extendable", check_non_extendable_characterization(f)))
    observations: List[Tuple[str, bool]] = []
    if K.m <= MAX_REACHABILITY_GROUND_SET:
        observations.append(("reachable_faces", reachable_final_faces(f) == set(K.maximal_faces)))

    free_rank = None
    if K.m <= MAX_SEARCH_GROUND_SET:
        free_rank, witness = max_free_rank_real(K)
        checks.append(("free_rank_bound", hc_verify(K, witness, FieldTag.GF2).holds))
    return CaseResult(K, tuple(checks), free_rank, tuple(observations))


def _cases(job: JobConfig, config: Dict[str, Any]) -> Tuple[List[SimplicialComplex], int, int, Optional[int]]:
    cases: List[SimplicialComplex] = []
    exhaustive = 0
    if job.exhaustive:
        cases.extend(enumerate_complexes(job.m))
        exhaustive = len(cases)
    seed = job.seed
    if job.random_count:
        if seed is None:
            seed = int(np.random.SeedSequence().entropy % (1 << 32))
            logger.warning(f"No --seed given; using {seed}")
        rng = np.random.default_rng(seed)
        sweep_config = config.get("sweep", {})
        sizes = [job.m] if job.m is not None else list(sweep_config.get("random_sizes", [5, 6]))
        for n in range(job.random_count):
            cases.append(random_complex(sizes[n % len(sizes)], rng, sweep_config.get("max_generators")))
    return cases, exhaustive, len(cases) - exhaustive, seed


def run_sweep(job: JobConfig, session: Session) -> Tuple[Dict[str, Any], bool]:
    """
    Check every case and publish one event per case (and per violation), in input order.
    """
    cases, exhaustive, random_count, seed = _cases(job, session.config)
    results = session.pool.map(check_case, cases, task_name="sweep")

    tally: Dict[str, Dict[str, int]] = {}
    observed: Dict[str, Dict[str, int]] = {}
    violations = []
    free_ranks: Dict[int, int] = {}
    for result in results:
        for name, ok in result.checks:
            counts = tally.setdefault(name, {"passed": 0, "failed": 0})
            counts["passed" if ok else "failed"] += 1
        for name, seen in result.observations:
            counts = observed.setdefault(name, {"true": 0, "false": 0})
            counts["true" if seen else "false"] += 1
        if result.free_rank is not None:
            free_ranks[result.free_rank] = free_ranks.get(result.free_rank, 0) + 1
        session.event_bus.publish(CASE_CHECKED, {"complex": str(result.complex), "failed": result.failed})
        for name in result.failed:
            details = {"check": name, "complex": describe_complex(result.complex)}
            violations.append(details)
            logger.error(f"Violation of {name} on {result.complex}")
            session.event_bus.publish(VIOLATION, details)

    report = {
        "command": "sweep",
        "m": job.m,
        "seed": seed,
        "exhaustive_cases": exhaustive,
        "random_cases": random_count,
        "cases": len(results),
        "checks": [{"check": name, **counts} for name, counts in tally.items()],
        "free_rank_histogram": [{"rank": r, "complexes": n} for r, n in sorted(free_ranks.items())],
        "observations": [{"observation": name, **counts} for name, counts in observed.items()],
        "violations": violations,
    }
    ok = not violations
    report["holds"] = ok
    logger.info(f"Sweep of {len(results)} complexes: {len(violations)} violations")
    return report, ok
