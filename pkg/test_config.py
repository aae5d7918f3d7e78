"""Tests for configuration loading and the application factory"""
import pytest

from betw import create_app
import config


def test_testing_config(app):
    assert app.config['TESTING']
    assert app.config['THREADS'] == 1
    assert app.config['SAMPLE_BUDGET'] == 200
    assert app.config['FIXTURES_PATH'].endswith('fixtures')


def test_config_names():
    assert config.config['testing'] is config.TestingConfig
    assert create_app('testing').config['TESTING']


def test_unknown_config_name():
    with pytest.raises(ValueError, match="Unknown configuration 'staging'"):
        create_app('staging')


@pytest.mark.parametrize('attribute, value, message', [
    ('THREADS', '0', 'at least 1'),
    ('THREADS', 'many', 'must be an integer'),
    ('SAMPLE_BUDGET', -3, 'must be positive'),
    ('EMBED_MAX_POINTS', 9, 'between 1 and 6'),
    ('LOG_LEVEL', 'loud', 'not a logging level'),
])
def test_invalid_settings(attribute, value, message):
    bad = type('BadConfig', (config.TestingConfig,), {attribute: value})
    with pytest.raises(ValueError, match=message):
        bad()


def test_settings_are_converted():
    settings = type('EnvConfig', (config.Config,), {'THREADS': '3', 'SEED': '11', 'LOG_LEVEL': 'debug'})()
    assert settings.THREADS == 3
    assert settings.SEED == 11
    assert settings.LOG_LEVEL == 'DEBUG'
