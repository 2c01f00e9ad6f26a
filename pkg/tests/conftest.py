"""Session fixtures shared by the acceptance suite.

The full six-count dataset grid and the per-case evaluation sweep are
expensive, so they are built once per session and reused by every
criterion that needs them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List

import pytest

from gjk2d.baseline import oracle_distance
from gjk2d.datasets import DatasetSpec, PairCase, generate_dataset
from gjk2d.gjk import CollisionResult, DistanceResult, distance, intersects

VERTEX_COUNTS = (4, 8, 12, 16, 20, 24)
CASES_PER_REGIME = 1000
DATASET_SEED = 20240811


@dataclass
class CaseEval:
    case: PairCase
    oracle: float
    sat: bool
    dist: DistanceResult
    coll: CollisionResult
    trace: List[float]


@pytest.fixture(scope="session")
def full_datasets() -> Dict[int, List[PairCase]]:
    datasets = {}
    for n in VERTEX_COUNTS:
        spec = DatasetSpec(
            vertex_count=n, cases_per_regime=CASES_PER_REGIME, seed=DATASET_SEED
        )
        datasets[n] = generate_dataset(spec)
    return datasets


@pytest.fixture(scope="session")
def case_evaluations(full_datasets) -> Dict[int, List[CaseEval]]:
    evaluations: Dict[int, List[CaseEval]] = {}
    for n, cases in full_datasets.items():
        rows = []
        for case in cases:
            report = oracle_distance(case.p, case.q)
            trace: List[float] = []
            dist = distance(case.p, case.q, norm_trace=trace)
            coll = intersects(case.p, case.q)
            rows.append(
                CaseEval(
                    case=case,
                    oracle=report.distance,
                    sat=report.distance == 0.0,
                    dist=dist,
                    coll=coll,
                    trace=trace,
                )
            )
        evaluations[n] = rows
    return evaluations
