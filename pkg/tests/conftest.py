import pytest

from zonal.algebra.cache import jack_cache
from zonal.db import make_engine
from zonal.models import Base
from zonal.verify.checks import RunContext


@pytest.fixture
def small_ctx():
    """Reduced sample count with a fixed seed; enough for loose z-score checks."""
    return RunContext(n_samples=20_000, seed=7, jobs=1, quad_order=40)


@pytest.fixture
def cache_dir(tmp_path):
    directory = jack_cache.directory
    jack_cache.set_directory(tmp_path / "jack")
    jack_cache.clear()
    yield tmp_path / "jack"
    jack_cache.clear()
    jack_cache.set_directory(directory)


@pytest.fixture
def session_factory():
    engine, factory = make_engine("sqlite://")
    Base.metadata.create_all(bind=engine)
    yield factory
    engine.dispose()
