"""
JSON and CSV rendering of entgeo reports.

Every float is rounded to 12 significant digits and complex numbers are
written as ``[re, im]`` pairs, so serializing the same report twice gives
byte-identical text. JSON output is one object with ``indent=2``; CSV output
always starts with a header row.

Schemas (JSON keys, in order):
- MeasureReport: n_qubits, probe, pairs[{a, b, value}], m, g, normalization,
  pair_count, class, homogeneity, tolerance, exceeds_unit_bound
- RoofResult: value, bound_kind, k, restarts_used, converged, probe, average,
  n_qubits, initial_value, evaluations, oracle
- HopfReport: n_qubits, images[{permutation, distinguished_qubit, components,
  k, k_purity[, vanishing]}][, meyer_wallach]
- ScottReport: n_qubits, m, q
- StateSummary: kind, n_qubits, purity, qubit_purities
- SweepTable: family, probe, rows[{x, p_a_b..., m, g}]
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import fields
from typing import Any, Dict, List, Union

import numpy as np

from agents.reports import HopfReport, ScottReport, StateSummary, SweepTable
from maps.hopf import MapImage2, MapImage3
from measures import MeasureReport
from numerics.types import DensityMatrix, StateVector
from roof import RoofResult

SIGNIFICANT_DIGITS = 12

Report = Union[MeasureReport, RoofResult, HopfReport, ScottReport, StateSummary, SweepTable]


def round_sig(x: float) -> float:
    value = float(f"{float(x):.{SIGNIFICANT_DIGITS}g}")
    return 0.0 if value == 0.0 else value


def _complex(z: complex) -> List[float]:
    return [round_sig(z.real), round_sig(z.imag)]


def _clean(value: Any) -> Any:
    """Recursively round floats and unwrap enums/complex numbers for JSON."""
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, bool) or value is None:
        return value
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    if isinstance(value, (complex, np.complexfloating)):
        return _complex(complex(value))
    if isinstance(value, (float, np.floating)):
        return round_sig(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def _image_components(image: Union[MapImage2, MapImage3]) -> Dict[str, Any]:
    return {f.name: getattr(image, f.name) for f in fields(image)}


def report_to_dict(report: Report) -> Dict[str, Any]:
    if isinstance(report, MeasureReport):
        payload = {
            "n_qubits": report.n_qubits,
            "probe": report.probe,
            "pairs": [{"a": a, "b": b, "value": v} for (a, b), v in report.pairs.values.items()],
            "m": report.m,
            "g": report.g,
            "normalization": report.normalization,
            "pair_count": report.pair_count,
            "class": report.classification,
            "homogeneity": report.homogeneity,
            "tolerance": report.tolerance,
            "exceeds_unit_bound": report.exceeds_unit_bound,
        }
    elif isinstance(report, RoofResult):
        payload = {
            "value": report.value,
            "bound_kind": report.bound_kind,
            "k": report.k,
            "restarts_used": report.restarts_used,
            "converged": report.converged,
            "probe": report.probe,
            "average": report.average,
            "n_qubits": report.n_qubits,
            "initial_value": report.initial_value,
            "evaluations": report.evaluations,
            "oracle": report.oracle,
        }
    elif isinstance(report, HopfReport):
        images = []
        for entry in report.entries:
            image = {
                "permutation": entry.permutation,
                "distinguished_qubit": entry.distinguished_qubit,
                "components": _image_components(entry.image),
                "k": entry.k,
                "k_purity": entry.k_purity,
            }
            if entry.vanishing is not None:
                image["vanishing"] = dict(zip(("c2", "c3", "c4"), entry.vanishing))
            images.append(image)
        payload = {"n_qubits": report.n_qubits, "images": images}
        if report.meyer_wallach is not None:
            payload["meyer_wallach"] = report.meyer_wallach
    elif isinstance(report, ScottReport):
        payload = {"n_qubits": report.n_qubits, "m": report.m, "q": report.value}
    elif isinstance(report, StateSummary):
        payload = {
            "kind": report.kind,
            "n_qubits": report.n_qubits,
            "purity": report.purity,
            "qubit_purities": report.qubit_purities,
        }
    elif isinstance(report, SweepTable):
        payload = {"family": report.family, "probe": report.probe, "rows": report.rows}
    else:
        raise TypeError(f"cannot serialize {type(report).__name__}")
    return _clean(payload)


def _csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


def _csv_rows(report: Report) -> List[Dict[str, Any]]:
    payload = report_to_dict(report)
    if isinstance(report, MeasureReport):
        row = {k: v for k, v in payload.items() if k != "pairs"}
        for pair in payload["pairs"]:
            row[f"p_{pair['a']}_{pair['b']}"] = pair["value"]
        return [row]
    if isinstance(report, HopfReport):
        rows = []
        for image in payload["images"]:
            row = {"permutation": image["permutation"], "distinguished_qubit": image["distinguished_qubit"]}
            for name, component in image["components"].items():
                if isinstance(component, list):
                    row[f"{name}_re"], row[f"{name}_im"] = component
                else:
                    row[name] = component
            row["k"] = image["k"]
            row["k_purity"] = image["k_purity"]
            rows.append(row)
        return rows
    if isinstance(report, StateSummary):
        row = {k: v for k, v in payload.items() if k != "qubit_purities"}
        for q, value in enumerate(payload["qubit_purities"], start=1):
            row[f"purity_{q}"] = value
        return [row]
    if isinstance(report, SweepTable):
        # register size may change along a family, so the pair columns are the union
        pair_columns: List[str] = []
        for row in payload["rows"]:
            pair_columns.extend(k for k in row if k.startswith("p_") and k not in pair_columns)
        return [
            {"x": row["x"], **{k: row.get(k) for k in pair_columns}, "m": row["m"], "g": row["g"]}
            for row in payload["rows"]
        ]
    return [payload]


def emit_report(report: Report, fmt: str = "json") -> str:
    """Render a report as JSON (one object) or CSV (header row plus data rows)."""
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"Unknown format: {fmt}")
    rows = _csv_rows(report)
    header = list(rows[0]) if rows else []
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(row.get(column)) for column in header])
    return buffer.getvalue()


def emit_state(state: Union[StateVector, DensityMatrix]) -> str:
    """State JSON or Density JSON in the input format accepted by ``--state-file``."""
    if isinstance(state, StateVector):
        payload = {
            "n_qubits": state.n_qubits,
            "amplitudes": [[float(z.real), float(z.imag)] for z in state.amplitudes],
        }
    else:
        payload = {
            "n_qubits": state.n_qubits,
            "rows": [[[float(z.real), float(z.imag)] for z in row] for row in state.matrix],
        }
    return json.dumps(payload) + "\n"
