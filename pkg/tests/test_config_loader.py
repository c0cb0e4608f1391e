"""Test configuration loading functionality."""

import os
import sys
import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config.config_loader import ConfigLoader, ConfigError, default_cap, default_seed, get_config, reload_config


def _write_yaml(text: str) -> str:
    handle = tempfile.NamedTemporaryFile('w', suffix='.yaml', delete=False, encoding='utf-8')
    handle.write(text)
    handle.close()
    return handle.name


def test_config_loading():
    """Test basic configuration loading."""
    print("Testing configuration loading...")
    config = get_config()

    assert config.get('field.characteristic') == 101
    assert config.get('isomorphism.max_attempts') == 3
    assert config.get('probes.mho_path_length') == 2
    assert config.get('non.existent.key', 'default_value') == 'default_value'
    print("✓ Configuration loaded successfully")


def test_env_var_substitution():
    """Test environment variable substitution."""
    print("\nTesting environment variable substitution...")
    path = _write_yaml("corpus:\n  fixtures_dir: ${DOMDIMLAB_TEST_FIXTURES}\n")
    try:
        with patch.dict(os.environ, {'DOMDIMLAB_TEST_FIXTURES': '/tmp/fixtures'}):
            config = ConfigLoader(path)
        assert config.get('corpus.fixtures_dir') == '/tmp/fixtures'

        with patch.dict(os.environ, {}, clear=False):
            os.environ.pop('DOMDIMLAB_TEST_FIXTURES', None)
            with pytest.raises(ConfigError, match='DOMDIMLAB_TEST_FIXTURES'):
                ConfigLoader(path)
    finally:
        Path(path).unlink()

    path = _write_yaml("scheduler:\n  max_concurrent_jobs: \"${DOMDIMLAB_TEST_JOBS:-2}\"\n")
    try:
        with patch.dict(os.environ, {}, clear=False):
            os.environ.pop('DOMDIMLAB_TEST_JOBS', None)
            assert ConfigLoader(path).get('scheduler.max_concurrent_jobs') == 2
        with patch.dict(os.environ, {'DOMDIMLAB_TEST_JOBS': '6'}):
            assert ConfigLoader(path).get('scheduler.max_concurrent_jobs') == 6
    finally:
        Path(path).unlink()
    print("✓ Environment variable substitution working")


def test_cap_override():
    """Test the DOMDIMLAB_CAP override and its validation."""
    print("\nTesting cap override...")
    with patch.dict(os.environ, {'DOMDIMLAB_CAP': '5'}):
        assert ConfigLoader().get('caps.default') == 5
    for bad in ('five', '0', '-2'):
        with patch.dict(os.environ, {'DOMDIMLAB_CAP': bad}):
            with pytest.raises(ConfigError, match='DOMDIMLAB_CAP'):
                ConfigLoader()
    with patch.dict(os.environ, {'DOMDIMLAB_CAP': ''}):
        assert ConfigLoader().get('caps.default') == 8
    print("✓ DOMDIMLAB_CAP override validated")


def test_required_fields():
    """Test required field validation."""
    print("\nTesting required field validation...")
    config = get_config()

    assert config.get_required('caps.path_length') == 30
    with pytest.raises(ConfigError):
        config.get_required('non.existent.required.field')
    print("✓ ConfigError raised for missing required field")


def test_config_validation():
    """Test configuration validation."""
    print("\nTesting configuration validation...")
    reload_config().validate()

    path = _write_yaml("field:\n  characteristic: 0\ncaps:\n  default: 0\n  path_length: 10\n"
                       "isomorphism:\n  trials: 4\n  max_attempts: 1\n  seed: 0\n")
    try:
        with pytest.raises(ConfigError, match='caps.default'):
            ConfigLoader(path).validate()
    finally:
        Path(path).unlink()
    print("✓ Configuration validation passed")


def test_missing_and_invalid_files():
    """Test errors for unreadable configuration files."""
    with pytest.raises(ConfigError, match='not found'):
        ConfigLoader('/nonexistent/config.yaml')
    path = _write_yaml("caps: [unclosed\n")
    try:
        with pytest.raises(ConfigError, match='YAML'):
            ConfigLoader(path)
    finally:
        Path(path).unlink()


def test_defaults():
    """Test resolution of cap and seed arguments."""
    reload_config()
    assert default_cap(None) == 8
    assert default_cap(3) == 3
    assert default_seed(None) == 0
    assert default_seed(17) == 17


def main():
    """Run all tests."""
    print("=" * 50)
    print("Configuration Loader Tests")
    print("=" * 50)

    tests = [
        test_config_loading,
        test_env_var_substitution,
        test_cap_override,
        test_required_fields,
        test_config_validation,
        test_missing_and_invalid_files,
        test_defaults,
    ]

    results = []
    for test in tests:
        try:
            test()
            results.append(True)
        except (AssertionError, ConfigError) as e:
            print(f"✗ {test.__name__}: {e}")
            results.append(False)

    print("\n" + "=" * 50)
    passed = sum(results)
    total = len(results)
    print(f"Tests passed: {passed}/{total}")

    if passed == total:
        print("All tests passed! ✓")
    else:
        print("Some tests failed! ✗")
        sys.exit(1)


if __name__ == "__main__":
    main()
