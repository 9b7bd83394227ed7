"""Tests for settings, logging and the error hierarchy."""

import numpy as np
import pytest
from pydantic import ValidationError

from swobstruct.errors import (
    DocumentError,
    InputError,
    InternalToleranceFailureError,
    InternalValidationError,
    NotAnIsometryError,
    SwObstructError,
)
from swobstruct.utils.config import Settings, get_settings
from swobstruct.utils.logger import get_logger, log_error, numpy_to_builtin


class TestSettings:
    """Test environment-driven settings."""

    def test_defaults(self):
        """Test default values."""
        settings = Settings()

        assert settings.max_isometry_order == 10000
        assert settings.search_workers == 1
        assert settings.search_result_limit is None
        assert settings.default_output_format == "text"

    def test_environment_override(self, monkeypatch):
        """Test that environment variables are picked up after a cache clear."""
        monkeypatch.setenv("SEARCH_WORKERS", "3")
        monkeypatch.setenv("DEFAULT_OUTPUT_FORMAT", "JSON")
        get_settings.cache_clear()

        settings = get_settings()

        assert settings.search_workers == 3
        assert settings.default_output_format == "json"

    def test_invalid_tolerance(self):
        """Test that tolerances must be positive."""
        with pytest.raises(ValidationError, match="Tolerance must be positive"):
            Settings(EIGEN_SPLIT_TOLERANCE=0)

    def test_invalid_worker_count(self):
        """Test that pool sizes must be at least one."""
        with pytest.raises(ValidationError):
            Settings(SEARCH_WORKERS=0)

    def test_invalid_output_format(self):
        """Test that only json and text are accepted."""
        with pytest.raises(ValidationError, match="Unknown output format"):
            Settings(DEFAULT_OUTPUT_FORMAT="yaml")

    def test_cached_instance(self):
        """Test that get_settings is cached."""
        assert get_settings() is get_settings()


class TestErrors:
    """Test the exception hierarchy."""

    def test_families(self):
        """Test the two top-level families and their exit codes."""
        assert issubclass(InputError, SwObstructError)
        assert issubclass(InternalToleranceFailureError, InternalValidationError)
        assert InputError.exit_code == 2
        assert InternalValidationError.exit_code == 3

    def test_context(self):
        """Test that operation and details are kept."""
        error = InputError("bad input", "make_lattice", details={"rank": 3})

        assert str(error) == "bad input"
        assert error.operation == "make_lattice"
        assert error.details == {"rank": 3}

    def test_not_an_isometry_fields(self):
        """Test the offending entry is recorded."""
        error = NotAnIsometryError("mismatch", "verify_isometry", row=1, column=2, expected=0, actual=2)

        assert (error.row, error.column, error.expected, error.actual) == (1, 2, 0, 2)
        assert error.details["actual"] == 2

    def test_document_error_path(self):
        """Test the path prefixes the message."""
        error = DocumentError("not symmetric", "lattice.summands.0.matrix")

        assert error.message == "lattice.summands.0.matrix: not symmetric"
        assert error.path == "lattice.summands.0.matrix"
        assert DocumentError("bad", "").message == "bad"


class TestLogging:
    """Test logging helpers."""

    def test_log_error(self):
        """Test that log_error does not raise."""
        logger = get_logger("test")
        log_error(logger, InputError("boom", "op"), context={"k": 1}, operation="op")

    def test_numpy_values_become_builtin(self):
        """Test the processor converts numpy values nested in events."""
        event = {"counts": {1: np.int64(2)}, "residual": np.float64(0.5), "v": np.array([1, -1])}
        result = numpy_to_builtin(None, "debug", event)

        assert result == {"counts": {1: 2}, "residual": 0.5, "v": [1, -1]}
        assert type(result["counts"][1]) is int
