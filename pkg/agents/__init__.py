from .analyzer import MAX_MEASURE_QUBITS, EntanglementAnalyzer, measure_report

__all__ = ["MAX_MEASURE_QUBITS", "EntanglementAnalyzer", "measure_report"]
