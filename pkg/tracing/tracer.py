"""
Lightweight in-process tracer for analysis runs.
"""

from __future__ import annotations

import time
import uuid
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional


class Tracer:
    """
    Collects per-step traces with timings, inputs, and outputs.
    """

    def __init__(self):
        self.current_trace: Dict[str, Any] = {}
        self.steps: List[Dict[str, Any]] = []

    def start_trace(self, label: str, **metadata: Any) -> None:
        self.current_trace = {
            "trace_id": str(uuid.uuid4()),
            "label": label,
            "metadata": metadata,
            "start_time": time.time(),
            "steps": [],
        }
        self.steps = []

    def record_step(
        self,
        step_name: str,
        input_payload: Dict[str, Any],
        output_payload: Dict[str, Any],
        attributes: Optional[Dict[str, Any]] = None,
        latency_ms: Optional[float] = None,
    ) -> None:
        now = time.time()
        self.steps.append(
            {
                "name": step_name,
                "input": input_payload,
                "output": output_payload,
                "attributes": attributes or {},
                "end_time": now,
                "latency_ms": latency_ms,
            }
        )

    @contextmanager
    def span(self, name: str, **attributes: Any) -> Iterator[Dict[str, Any]]:
        """
        Time a block and record it as a step.

        The yielded dict is the step's output payload; the caller fills it in.
        ``attributes`` become the step's input payload.
        """
        output: Dict[str, Any] = {}
        start = time.perf_counter()
        try:
            yield output
        finally:
            latency = round((time.perf_counter() - start) * 1000, 3)
            self.record_step(name, dict(attributes), output, latency_ms=latency)

    def end_trace(self) -> Dict[str, Any]:
        end_time = time.time()
        self.current_trace["end_time"] = end_time
        self.current_trace["latency_ms"] = round(
            (end_time - self.current_trace.get("start_time", end_time)) * 1000, 2
        )
        self.current_trace["steps"] = self.steps
        return self.current_trace
