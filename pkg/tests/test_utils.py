"""Unit tests for core utility functions."""

import json
import logging
import unittest
from unittest.mock import Mock

from utils.utils import (
    setup_logging,
    certify_with_retry,
    JsonFormatter,
    CertificationFailed,
    DisagreementDetected,
    DomDimLabError,
    DslSyntaxError,
    SchemaError,
    ValidationError,
)


class TestSetupLogging(unittest.TestCase):
    """Test logging setup functionality."""

    def test_setup_logging_json_format(self):
        """Test JSON format logging setup."""
        logger = setup_logging("test.logger", level="INFO", log_format="json")

        self.assertEqual(logger.name, "test.logger")
        self.assertEqual(logger.level, 20)  # INFO level
        self.assertFalse(logger.propagate)
        self.assertEqual(len(logger.handlers), 1)
        self.assertIsInstance(logger.handlers[0].formatter, JsonFormatter)

    def test_setup_logging_text_format(self):
        """Test text format logging setup."""
        logger = setup_logging("test.logger", level="DEBUG", log_format="text")

        self.assertEqual(logger.name, "test.logger")
        self.assertEqual(logger.level, 10)  # DEBUG level

    def test_setup_logging_twice_keeps_one_handler(self):
        setup_logging("test.repeat")
        logger = setup_logging("test.repeat")
        self.assertEqual(len(logger.handlers), 1)

    def test_json_formatter(self):
        record = logging.LogRecord("checker.domdim", logging.WARNING, __file__, 12, "cap %d reached", (4,), None)
        entry = json.loads(JsonFormatter().format(record))
        self.assertEqual(entry['level'], 'WARNING')
        self.assertEqual(entry['logger'], 'checker.domdim')
        self.assertEqual(entry['message'], 'cap 4 reached')


class TestCertifyWithRetry(unittest.TestCase):
    """Test escalating certification."""

    def test_first_attempt_succeeds(self):
        attempt = Mock(return_value="witness")
        self.assertEqual(certify_with_retry(attempt, 10, 3), "witness")
        attempt.assert_called_once_with(10, 3)

    def test_escalates_trials_and_seed(self):
        attempt = Mock(side_effect=[CertificationFailed("no"), CertificationFailed("no"), "witness"])
        self.assertEqual(certify_with_retry(attempt, 10, 3, max_attempts=3), "witness")
        self.assertEqual([c.args for c in attempt.call_args_list], [(10, 3), (20, 7922), (40, 15841)])

    def test_gives_up(self):
        attempt = Mock(side_effect=CertificationFailed("no witness"))
        with self.assertRaises(CertificationFailed):
            certify_with_retry(attempt, 4, 0, max_attempts=2)
        self.assertEqual(attempt.call_count, 2)

    def test_other_errors_are_not_retried(self):
        attempt = Mock(side_effect=SchemaError("bad"))
        with self.assertRaises(SchemaError):
            certify_with_retry(attempt, 4, 0)
        attempt.assert_called_once()


class TestExceptions(unittest.TestCase):
    """Test custom exception types."""

    def test_hierarchy(self):
        self.assertTrue(issubclass(SchemaError, ValidationError))
        self.assertTrue(issubclass(ValidationError, DomDimLabError))
        self.assertTrue(issubclass(DisagreementDetected, DomDimLabError))

    def test_dsl_syntax_error_position(self):
        error = DslSyntaxError("unexpected token", 3, 7)
        self.assertEqual((error.line, error.column), (3, 7))
        self.assertIn("line 3, column 7", str(error))

    def test_disagreement_report(self):
        self.assertEqual(DisagreementDetected("x").report, {})
        self.assertEqual(DisagreementDetected("x", {"n": 2}).report, {"n": 2})


if __name__ == '__main__':
    unittest.main()
