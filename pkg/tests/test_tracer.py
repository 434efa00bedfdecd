"""
Tests for tracing/tracer.py
"""

import pytest

from tracing.tracer import Tracer


class TestTracer:
    """Trace lifecycle and spans."""

    def test_trace_lifecycle(self):
        """Test start, record and end produce one trace with its steps."""
        tracer = Tracer()
        tracer.start_trace("ghz:4", probe="fr")
        tracer.record_step("probe_pairs", {"n_qubits": 4}, {"pair_count": 6})
        trace = tracer.end_trace()

        assert trace["label"] == "ghz:4"
        assert trace["metadata"] == {"probe": "fr"}
        assert trace["steps"][0]["name"] == "probe_pairs"
        assert trace["steps"][0]["output"] == {"pair_count": 6}
        assert trace["latency_ms"] >= 0

    def test_span_records_output_and_latency(self):
        """Test a span stores its attributes as input and the yielded dict as output."""
        tracer = Tracer()
        tracer.start_trace("roof")
        with tracer.span("restart", index=0, k=4) as out:
            out["value"] = 0.25

        step = tracer.end_trace()["steps"][0]
        assert step["input"] == {"index": 0, "k": 4}
        assert step["output"] == {"value": 0.25}
        assert step["latency_ms"] >= 0

    def test_span_is_recorded_when_the_block_raises(self):
        """Test a failing block still leaves its step behind."""
        tracer = Tracer()
        tracer.start_trace("measure")
        with pytest.raises(RuntimeError):
            with tracer.span("average"):
                raise RuntimeError("boom")

        assert [step["name"] for step in tracer.end_trace()["steps"]] == ["average"]

    def test_new_trace_clears_steps(self):
        """Test starting a trace discards the previous steps."""
        tracer = Tracer()
        tracer.start_trace("first")
        tracer.record_step("a", {}, {})
        tracer.end_trace()
        tracer.start_trace("second")

        assert tracer.end_trace()["steps"] == []
