"""
metrics.py - Observability for the reduction and interpolation engines.

Provides:
- Prometheus-style counters and histograms in a process-wide registry
- Structured JSON logging
- An event logger for normalization, interpolation and verification
"""

import json
import logging
import threading
import time
from dataclasses import dataclass, field


# =============================================================================
# Metric Types
# =============================================================================

@dataclass
class MetricValue:
    """Single metric value with labels."""
    name: str
    value: float
    labels: dict[str, str] = field(default_factory=dict)
    timestamp: float = field(default_factory=time.time)


# =============================================================================
# Metric Collectors
# =============================================================================

class Counter:
    """Prometheus-style counter metric."""

    def __init__(self, name: str, help_text: str, labels: list[str] | None = None) -> None:
        self.name = name
        self.help = help_text
        self.labels = labels or []
        self._values: dict[tuple[str, ...], float] = {}
        self._lock = threading.Lock()

    def inc(self, value: float = 1, **label_values: str) -> None:
        key = self._label_key(label_values)
        with self._lock:
            self._values[key] = self._values.get(key, 0) + value

    def get(self, **label_values: str) -> float:
        key = self._label_key(label_values)
        return self._values.get(key, 0)

    def collect(self) -> list[MetricValue]:
        with self._lock:
            return [
                MetricValue(name=self.name, value=value, labels=dict(zip(self.labels, key)))
                for key, value in self._values.items()
            ]

    def _label_key(self, label_values: dict[str, str]) -> tuple[str, ...]:
        return tuple(label_values.get(label, "") for label in self.labels)


class Histogram:
    """Prometheus-style histogram metric."""

    DEFAULT_BUCKETS = (1, 2, 5, 10, 25, 50, 100, 250, 1000, 10_000, float("inf"))

    def __init__(
        self,
        name: str,
        help_text: str,
        labels: list[str] | None = None,
        buckets: tuple[float, ...] | None = None,
    ) -> None:
        self.name = name
        self.help = help_text
        self.labels = labels or []
        self.buckets = buckets or self.DEFAULT_BUCKETS
        self._values: dict[tuple[str, ...], dict] = {}
        self._lock = threading.Lock()

    def observe(self, value: float, **label_values: str) -> None:
        key = self._label_key(label_values)
        with self._lock:
            if key not in self._values:
                self._values[key] = {
                    "count": 0,
                    "sum": 0.0,
                    "buckets": {b: 0 for b in self.buckets},
                }
            data = self._values[key]
            data["count"] += 1
            data["sum"] += value
            for bucket in self.buckets:
                if value <= bucket:
                    data["buckets"][bucket] += 1

    def count(self, **label_values: str) -> int:
        data = self._values.get(self._label_key(label_values))
        return data["count"] if data else 0

    def collect(self) -> list[MetricValue]:
        results = []
        with self._lock:
            for key, data in self._values.items():
                labels = dict(zip(self.labels, key))
                results.append(MetricValue(f"{self.name}_sum", data["sum"], labels))
                results.append(MetricValue(f"{self.name}_count", data["count"], labels))
                for le, count in data["buckets"].items():
                    results.append(
                        MetricValue(f"{self.name}_bucket", count, {**labels, "le": str(le)})
                    )
        return results

    def _label_key(self, label_values: dict[str, str]) -> tuple[str, ...]:
        return tuple(label_values.get(label, "") for label in self.labels)


# =============================================================================
# Metrics Registry
# =============================================================================

class MetricsRegistry:
    """Global metrics registry."""

    def __init__(self, prefix: str = "stlc_interp") -> None:
        self.prefix = prefix
        self._metrics: dict[str, Counter | Histogram] = {}
        self._lock = threading.Lock()

    def counter(self, name: str, help_text: str, labels: list[str] | None = None) -> Counter:
        full_name = f"{self.prefix}_{name}"
        with self._lock:
            if full_name not in self._metrics:
                self._metrics[full_name] = Counter(full_name, help_text, labels)
            metric = self._metrics[full_name]
        assert isinstance(metric, Counter)
        return metric

    def histogram(
        self,
        name: str,
        help_text: str,
        labels: list[str] | None = None,
        buckets: tuple[float, ...] | None = None,
    ) -> Histogram:
        full_name = f"{self.prefix}_{name}"
        with self._lock:
            if full_name not in self._metrics:
                self._metrics[full_name] = Histogram(full_name, help_text, labels, buckets)
            metric = self._metrics[full_name]
        assert isinstance(metric, Histogram)
        return metric

    def collect_all(self) -> list[MetricValue]:
        results = []
        with self._lock:
            for metric in self._metrics.values():
                results.extend(metric.collect())
        return results

    def export_prometheus(self) -> str:
        """Export metrics in Prometheus text format."""
        lines = []
        for metric in self.collect_all():
            if metric.labels:
                label_str = ",".join(f'{k}="{v}"' for k, v in metric.labels.items())
                lines.append(f"{metric.name}{{{label_str}}} {metric.value}")
            else:
                lines.append(f"{metric.name} {metric.value}")
        return "\n".join(lines)


# =============================================================================
# Engine Metrics
# =============================================================================

_registry = MetricsRegistry()

reduction_steps_total = _registry.counter(
    "reduction_steps_total",
    "Contracted redexes, by rule",
    labels=["rule"],
)

normalizations_total = _registry.counter(
    "normalizations_total",
    "Normalization runs, by outcome",
    labels=["status"],
)

normalization_steps = _registry.histogram(
    "normalization_steps",
    "Steps taken by one normalization run",
)

interpolations_total = _registry.counter(
    "interpolations_total",
    "Neutral heads interpolated, by side",
    labels=["side"],
)

certificates_verified_total = _registry.counter(
    "certificates_verified_total",
    "Certificate verifications, by verdict",
    labels=["verdict"],
)


def get_registry() -> MetricsRegistry:
    """Get the global metrics registry."""
    return _registry


# =============================================================================
# Structured Logging
# =============================================================================

_RESERVED_ATTRS = frozenset(
    {
        "name", "msg", "args", "created", "filename", "funcName",
        "levelname", "levelno", "lineno", "module", "msecs",
        "pathname", "process", "processName", "relativeCreated",
        "stack_info", "exc_info", "exc_text", "thread", "threadName",
        "message", "taskName",
    }
)


class JSONFormatter(logging.Formatter):
    """JSON log formatter for structured logging."""

    def __init__(self, include_extra: bool = True) -> None:
        super().__init__()
        self.include_extra = include_extra

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)
        if self.include_extra:
            for key, value in record.__dict__.items():
                if key not in _RESERVED_ATTRS:
                    log_data[key] = value
        return json.dumps(log_data, default=str)


class EngineLogger:
    """
    Structured logger for engine events.

    Each event method logs with an `event` field and updates the
    matching metric.
    """

    def __init__(self, name: str = "stlc_interp") -> None:
        self._logger = logging.getLogger(name)

    def normalization_completed(self, steps: int, rules: dict[str, int]) -> None:
        self._logger.debug(
            f"Normalized in {steps} steps",
            extra={"event": "normalization_completed", "steps": steps, "rules": rules},
        )
        for rule, count in rules.items():
            reduction_steps_total.inc(count, rule=rule)
        normalizations_total.inc(1, status="ok")
        normalization_steps.observe(steps)

    def fuel_exhausted(self, fuel: int) -> None:
        self._logger.error(
            f"Normalization ran out of fuel after {fuel} steps",
            extra={"event": "fuel_exhausted", "fuel": fuel},
        )
        normalizations_total.inc(1, status="fuel_exhausted")

    def interpolation_completed(self, interpolant: str, size: int, heads: dict[str, int]) -> None:
        self._logger.info(
            f"Interpolant computed: {interpolant}",
            extra={
                "event": "interpolation_completed",
                "interpolant": interpolant,
                "size": size,
                "heads": heads,
            },
        )
        for side, count in heads.items():
            interpolations_total.inc(count, side=side)

    def certificate_verified(self, passed: bool, failed_clauses: list[str]) -> None:
        verdict = "pass" if passed else "fail"
        level = logging.INFO if passed else logging.WARNING
        self._logger.log(
            level,
            f"Certificate verification: {verdict}",
            extra={
                "event": "certificate_verified",
                "verdict": verdict,
                "failed_clauses": failed_clauses,
            },
        )
        certificates_verified_total.inc(1, verdict=verdict)


def configure_logging(
    level: str = "WARNING",
    json_format: bool = False,
    log_file: str | None = None,
) -> None:
    """
    Configure logging for the command-line tool.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR)
        json_format: Use JSON formatting on the console
        log_file: Optional log file path (always JSON)
    """
    handlers: list[logging.Handler] = []

    console = logging.StreamHandler()
    if json_format:
        console.setFormatter(JSONFormatter())
    else:
        console.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )
    handlers.append(console)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(JSONFormatter())
        handlers.append(file_handler)

    logging.basicConfig(level=getattr(logging, level.upper()), handlers=handlers, force=True)
