"""Core utility functions for the dominant dimension workbench.

This module provides:
- Custom exceptions for every failure the computations can report
- Logging setup
- Certification with escalating retries
"""

import json
import logging
from datetime import datetime, timezone
from typing import Any, Callable, Dict, Optional, TypeVar

from tenacity import RetryError, Retrying, retry_if_exception_type, stop_after_attempt


# Custom Exceptions
class DomDimLabError(Exception):
    """Base exception for workbench errors."""
    pass


class ConfigurationError(DomDimLabError):
    """Exception for configuration-related errors."""
    pass


class ValidationError(DomDimLabError):
    """Exception for input that violates a structural axiom."""
    pass


class NotAssociative(ValidationError):
    """Structure constants are not associative."""
    pass


class BadUnit(ValidationError):
    """The designated unit is not a two-sided identity."""
    pass


class BadIdempotents(ValidationError):
    """Designated idempotents are not complete, orthogonal and idempotent."""
    pass


class BadRadical(ValidationError):
    """Radical basis is not a nilpotent ideal with split semisimple quotient."""
    pass


class SchemaError(ValidationError):
    """JSON input does not follow the documented schema."""
    pass


class InvalidKupischSeries(ValidationError):
    """Kupisch series violates the admissibility inequalities."""
    pass


class FieldMismatch(DomDimLabError):
    """Operands live over different fields."""
    pass


class AlgebraMismatch(DomDimLabError):
    """Modules or morphisms live over different algebras."""
    pass


class DslSyntaxError(DomDimLabError):
    """Quiver DSL syntax error with its position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownName(DomDimLabError):
    """A vertex or arrow name is used before it is declared."""
    pass


class NonParallelRelation(DomDimLabError):
    """Paths of one relation do not share source and target."""
    pass


class NotAdmissible(DomDimLabError):
    """The relation ideal does not contain all long paths within the length cap."""
    pass


class MorphismError(DomDimLabError):
    """A matrix does not intertwine the module actions."""
    pass


class ResolutionError(DomDimLabError):
    """A resolution failed its exactness or minimality bookkeeping."""
    pass


class PreconditionError(DomDimLabError):
    """An operation was called outside its stated hypotheses."""
    pass


class CertificationFailed(DomDimLabError):
    """Randomized search did not certify an expected isomorphism."""
    pass


class DisagreementDetected(DomDimLabError):
    """Independent computations of the same invariant disagree."""

    def __init__(self, message: str, report: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.report = report or {}


class JsonFormatter(logging.Formatter):
    """Single-line JSON log records."""

    def format(self, record: logging.LogRecord) -> str:
        log_entry = {
            'timestamp': datetime.now(timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno
        }
        if record.exc_info:
            log_entry['exception'] = self.formatException(record.exc_info)
        return json.dumps(log_entry)


def setup_logging(
    name: str,
    level: str = "INFO",
    log_format: str = "text"
) -> logging.Logger:
    """Setup centralized logging configuration.

    Args:
        name: Logger name (usually module or checker name)
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_format: Log format ("json" or "text")

    Returns:
        Configured logger instance

    Raises:
        ConfigurationError: If logging setup fails
    """
    try:
        logger = logging.getLogger(name)
        logger.setLevel(getattr(logging, level.upper()))

        # Clear existing handlers to avoid duplicates
        logger.handlers.clear()

        console_handler = logging.StreamHandler()
        if log_format.lower() == "json":
            formatter: logging.Formatter = JsonFormatter()
        else:
            formatter = logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            )

        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)
        logger.propagate = False

        return logger

    except Exception as e:
        raise ConfigurationError(f"Failed to setup logging for {name}: {e}")


T = TypeVar("T")


def certify_with_retry(
    attempt: Callable[[int, int], T],
    trials: int,
    seed: int,
    max_attempts: int = 3
) -> T:
    """Run a randomized certification, escalating on failure.

    ``attempt(trials, seed)`` must either return a certified result or raise
    CertificationFailed. Each retry doubles the trial count and moves the seed.

    Args:
        attempt: Callable performing one certification attempt
        trials: Trial count for the first attempt
        seed: Seed for the first attempt
        max_attempts: Total number of attempts

    Returns:
        The first certified result

    Raises:
        CertificationFailed: If every attempt fails
    """
    state = {"trials": trials, "seed": seed}
    retrying = Retrying(
        stop=stop_after_attempt(max_attempts),
        retry=retry_if_exception_type(CertificationFailed),
        reraise=True
    )
    try:
        for attempt_ctx in retrying:
            with attempt_ctx:
                number = attempt_ctx.retry_state.attempt_number
                current_trials = state["trials"] * (2 ** (number - 1))
                current_seed = state["seed"] + 7919 * (number - 1)
                return attempt(current_trials, current_seed)
    except RetryError as e:  # pragma: no cover - reraise=True surfaces the original
        raise CertificationFailed(str(e))
    raise CertificationFailed("certification loop exited without a result")
