"""Base checker class for all theorem checkers.

This module provides the run lifecycle shared by the checkers in
``bimodule_lab.checkers``: logging, error capture and the JSON verdict
envelope.
"""

import logging
from abc import ABC, abstractmethod
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from algebras.algebra import Algebra
from config.config_loader import default_cap, default_seed, get_config
from utils.utils import DisagreementDetected, DomDimLabError, setup_logging


class BaseChecker(ABC):
    """Abstract base class for checkers that emit JSON verdicts."""

    def __init__(self, checker_name: str, algebra: Algebra,
                 cap: Optional[int] = None, seed: Optional[int] = None):
        """Initialize the base checker.

        Args:
            checker_name: Name of the checker (e.g., 'main-theorem', 'hochschild')
            algebra: Algebra under test
            cap: Bound for every "for all i" condition; None uses the configured cap
            seed: Seed for randomized isomorphism tests; None uses the configured seed
        """
        self.checker_name = checker_name
        self.algebra = algebra
        self.config = get_config()
        self.cap = default_cap(cap)
        self.seed = default_seed(seed)

        # Setup logging
        self.logger = self._setup_logging()

    def _setup_logging(self) -> logging.Logger:
        """Setup logging for the checker using centralized utility."""
        log_level = self.config.get('logging_config.level', 'INFO')
        log_format = self.config.get('logging_config.format', 'text')

        return setup_logging(
            f"checker.{self.checker_name}",
            level=log_level,
            log_format=log_format
        )

    @abstractmethod
    def check(self) -> Dict[str, Any]:
        """Main checking method to be implemented by subclasses.

        Returns:
            Dictionary with the verdicts; an ``agreement`` key, when present,
            decides whether the run counts as a disagreement
        """
        pass

    def run(self, strict: bool = True) -> Dict[str, Any]:
        """Run the complete check.

        Args:
            strict: Re-raise domain errors after recording them

        Returns:
            Verdict envelope with status and errors

        Raises:
            DisagreementDetected: In strict mode, when independent computations disagree
            DomDimLabError: In strict mode, when a computation fails
        """
        start_time = datetime.now(timezone.utc)
        result: Dict[str, Any] = {
            'checker': self.checker_name,
            'algebra': self.algebra.fingerprint,
            'algebra_name': self.algebra.name,
            'cap': self.cap,
            'seed': self.seed,
            'status': 'started',
            'errors': []
        }
        pending: Optional[DomDimLabError] = None

        try:
            self.logger.info(f"Starting {self.checker_name} check on {self.algebra!r}")
            result.update(self.check())
            if result.get('agreement', True):
                result['status'] = 'completed'
            else:
                result['status'] = 'disagreement'
                pending = DisagreementDetected(f"{self.checker_name}: computations disagree", result)

        except DisagreementDetected as e:
            self.logger.error(f"Disagreement in {self.checker_name}: {e}")
            result['status'] = 'disagreement'
            result['errors'].append({'error': str(e), 'type': type(e).__name__, 'report': e.report})
            pending = e

        except DomDimLabError as e:
            self.logger.error(f"Error in {self.checker_name} check: {str(e)}")
            result['status'] = 'failed'
            result['errors'].append({
                'error': str(e),
                'type': type(e).__name__
            })
            pending = e

        finally:
            duration = (datetime.now(timezone.utc) - start_time).total_seconds()

            # timing stays out of the verdict so that reports are reproducible
            self.logger.info(
                f"Completed {self.checker_name} check - "
                f"Status: {result['status']}, "
                f"Duration: {duration:.2f}s"
            )

        if strict and isinstance(pending, DisagreementDetected):
            raise DisagreementDetected(str(pending), result)
        if strict and pending is not None:
            raise pending
        return result
