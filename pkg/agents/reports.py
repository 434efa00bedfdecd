"""
Report builders for the map, Scott, state and sweep commands.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from agents.analyzer import EntanglementAnalyzer
from data.datasets import load_family
from evaluators import ProbeKind
from maps import (
    MapImage2,
    MapImage3,
    Permutation,
    all_permutations,
    k_invariant,
    meyer_wallach,
    permuted_three_qubit_map,
    scott_q,
    two_qubit_map,
    two_qubit_map_swapped,
    vanishing_pattern,
)
from numerics.linalg import partial_trace, purity
from numerics.types import DensityMatrix, StateVector
from utils.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfEntry:
    permutation: str
    distinguished_qubit: int
    image: Union[MapImage2, MapImage3]
    k: float
    k_purity: float
    vanishing: Optional[Tuple[bool, bool, bool]] = None


@dataclass(frozen=True)
class HopfReport:
    n_qubits: int
    entries: List[HopfEntry]
    meyer_wallach: Optional[float] = None


@dataclass(frozen=True)
class ScottReport:
    n_qubits: int
    m: int
    value: float


@dataclass(frozen=True)
class StateSummary:
    kind: str
    n_qubits: int
    purity: float
    qubit_purities: List[float]


@dataclass(frozen=True)
class SweepTable:
    family: str
    probe: ProbeKind
    rows: List[Dict[str, float]] = field(default_factory=list)


def _require_pure(state: Union[StateVector, DensityMatrix], command: str) -> StateVector:
    if not isinstance(state, StateVector):
        raise ParameterError(f"{command} needs a pure state")
    return state


def _hopf_entry(psi: StateVector, perm: Permutation) -> HopfEntry:
    if psi.n_qubits == 2:
        image: Union[MapImage2, MapImage3] = (
            two_qubit_map(psi) if perm.distinguished_qubit == 1 else two_qubit_map_swapped(psi)
        )
        vanishing = None
    else:
        image = permuted_three_qubit_map(psi, perm)
        vanishing = vanishing_pattern(image)
    k_purity = 2.0 * (1.0 - purity(partial_trace(psi, [perm.distinguished_qubit])))
    return HopfEntry(
        permutation=perm.label,
        distinguished_qubit=perm.distinguished_qubit,
        image=image,
        k=k_invariant(image),
        k_purity=k_purity,
        vanishing=vanishing,
    )


def hopf_report(state: Union[StateVector, DensityMatrix], all_perms: bool = False) -> HopfReport:
    """Map image of a 2- or 3-qubit state; with ``all_perms`` one image per relabeling."""
    psi = _require_pure(state, "hopf")
    n = psi.n_qubits
    if n not in (2, 3):
        raise ParameterError(f"hopf maps are defined for 2 or 3 qubits, got {n}")
    perms = list(all_permutations(n)) if all_perms else [Permutation.identity(n)]
    entries = [_hopf_entry(psi, perm) for perm in perms]
    mw = meyer_wallach(psi) if all_perms else None
    return HopfReport(n_qubits=n, entries=entries, meyer_wallach=mw)


def scott_report(state: Union[StateVector, DensityMatrix], m: int = 1) -> ScottReport:
    psi = _require_pure(state, "scott")
    return ScottReport(n_qubits=psi.n_qubits, m=m, value=scott_q(psi, m))


def state_summary(state: Union[StateVector, DensityMatrix]) -> StateSummary:
    n = state.n_qubits
    whole = 1.0 if isinstance(state, StateVector) else purity(state)
    return StateSummary(
        kind="pure" if isinstance(state, StateVector) else "density",
        n_qubits=n,
        purity=whole,
        qubit_purities=[purity(partial_trace(state, [q])) for q in range(1, n + 1)],
    )


def sweep_table(
    family: str, values: List[float], probe: Union[ProbeKind, str], tol: float
) -> SweepTable:
    """One row per family member: the parameter, every pair value, M and G."""
    analyzer = EntanglementAnalyzer(probe=probe, tolerance=tol)
    rows = []
    for x, psi in load_family(family, values):
        report = analyzer.analyze(psi, label=f"{family}:{x}")
        row: Dict[str, float] = {"x": x}
        for (a, b), value in report.pairs.values.items():
            row[f"p_{a}_{b}"] = value
        row["m"] = report.m
        row["g"] = report.g
        rows.append(row)
    logger.debug("sweep finished", extra={"family": family, "points": len(rows)})
    return SweepTable(family=family, probe=ProbeKind(probe), rows=rows)
