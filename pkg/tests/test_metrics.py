"""
test_metrics.py - Tests for metrics and structured logging.
"""

import json
import logging

from stlc_interp.metrics import (
    Counter,
    EngineLogger,
    Histogram,
    JSONFormatter,
    MetricsRegistry,
    certificates_verified_total,
    configure_logging,
    get_registry,
    normalizations_total,
    reduction_steps_total,
)


class TestCollectors:
    """Counters, histograms and the registry."""

    def test_counter_labels(self):
        """Verify that counters keep one value per label set."""
        counter = Counter("c", "help", labels=["side"])
        counter.inc(side="source")
        counter.inc(2, side="source")
        counter.inc(side="target")
        assert counter.get(side="source") == 3
        assert counter.get(side="target") == 1
        assert counter.get(side="other") == 0

    def test_histogram_buckets(self):
        """Verify that histogram buckets are cumulative."""
        histogram = Histogram("h", "help", buckets=(1, 10, float("inf")))
        histogram.observe(0)
        histogram.observe(5)
        histogram.observe(50)
        assert histogram.count() == 3
        buckets = {
            m.labels["le"]: m.value for m in histogram.collect() if m.name == "h_bucket"
        }
        assert buckets == {"1": 1, "10": 2, "inf": 3}

    def test_registry_reuses_metrics(self):
        """Verify that the registry returns the existing metric."""
        registry = MetricsRegistry(prefix="test")
        first = registry.counter("runs", "Runs", labels=["status"])
        assert registry.counter("runs", "Runs", labels=["status"]) is first
        first.inc(status="ok")
        assert 'test_runs{status="ok"} 1' in registry.export_prometheus()

    def test_engine_metrics_are_registered(self):
        """Verify that engine metrics appear in the export."""
        normalizations_total.inc(status="ok")
        exported = get_registry().export_prometheus()
        assert "stlc_interp_normalizations_total" in exported


class TestEngineLogger:
    """Engine events update metrics and log."""

    def test_normalization_updates_counters(self):
        """Verify that a completed normalization bumps the counters."""
        events = EngineLogger("tests.metrics")
        before_rule = reduction_steps_total.get(rule="FunBeta")
        before_ok = normalizations_total.get(status="ok")
        events.normalization_completed(3, {"FunBeta": 3})
        assert reduction_steps_total.get(rule="FunBeta") == before_rule + 3
        assert normalizations_total.get(status="ok") == before_ok + 1

    def test_fuel_exhausted_is_logged(self, caplog):
        """Verify that fuel exhaustion is counted and logged."""
        before = normalizations_total.get(status="fuel_exhausted")
        with caplog.at_level(logging.ERROR, logger="tests.metrics"):
            EngineLogger("tests.metrics").fuel_exhausted(7)
        assert normalizations_total.get(status="fuel_exhausted") == before + 1
        (record,) = caplog.records
        assert record.event == "fuel_exhausted"
        assert record.fuel == 7

    def test_failed_verification_warns(self, caplog):
        """Verify that a failed verification logs a warning."""
        before = certificates_verified_total.get(verdict="fail")
        with caplog.at_level(logging.WARNING, logger="tests.metrics"):
            EngineLogger("tests.metrics").certificate_verified(False, ["digest"])
        assert certificates_verified_total.get(verdict="fail") == before + 1
        assert caplog.records[0].failed_clauses == ["digest"]


class TestLogging:
    """JSON log formatting and file output."""

    def test_json_formatter_includes_extra(self):
        """Verify that extra fields reach the JSON output."""
        record = logging.LogRecord("x", logging.INFO, __file__, 1, "hello %s", ("world",), None)
        record.event = "greeting"
        data = json.loads(JSONFormatter().format(record))
        assert data["message"] == "hello world"
        assert data["level"] == "INFO"
        assert data["event"] == "greeting"

    def test_configure_logging_writes_json_file(self, tmp_path):
        """Verify that file logging writes JSON lines."""
        log_file = tmp_path / "engine.log"
        configure_logging(level="INFO", log_file=str(log_file))
        try:
            logging.getLogger("tests.metrics").info("written", extra={"event": "file_check"})
            for handler in logging.getLogger().handlers:
                handler.flush()
            line = log_file.read_text().strip().splitlines()[-1]
            assert json.loads(line)["event"] == "file_check"
        finally:
            configure_logging()
