import os

import pytest
from hypothesis import settings

from betw import create_app
from betw.services.golden_service import GoldenService

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')

# no per-example deadline
settings.register_profile('betw', deadline=None)
settings.load_profile('betw')


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def runner(app):
    return app.test_cli_runner()


@pytest.fixture(scope='session')
def fx():
    """Reference structures from fixtures/ by name"""
    return GoldenService.load_fixtures(FIXTURES_DIR)


@pytest.fixture
def fixture_path():
    def path(name):
        return os.path.join(FIXTURES_DIR, name)
    return path
