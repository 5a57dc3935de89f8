# Licensed under a 3-clause BSD style license - see LICENSE.rst

import pytest

from ..defaults import *


def test_working_order():
    assert working_order.get() == 16
    with working_order.set(10):
        assert working_order.get() == 10
    assert working_order.get() == 16


def test_validation():
    with pytest.raises(TypeError):
        default_trials.set(2.5)
    with pytest.raises(TypeError):
        default_bound.set(True)
    with pytest.raises(ValueError):
        working_order.set(0)
    with pytest.raises(ValueError):
        default_seed.set(-1)
    with pytest.raises(TypeError):
        coefficient_sampler.set((-1, 1))


def test_sampler():
    with pytest.raises(ValueError):
        CoefficientSampler((3, 1))
    with pytest.raises(ValueError):
        CoefficientSampler((-1, 1), (0, 2))


class TestSeedFromEnvironment:
    def test_explicit(self, monkeypatch):
        monkeypatch.setenv(SEED_ENVIRONMENT_VARIABLE, "11")
        assert seed_from_environment(5) == 5

    def test_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENVIRONMENT_VARIABLE, "11")
        assert seed_from_environment() == 11

    def test_default(self, monkeypatch):
        monkeypatch.delenv(SEED_ENVIRONMENT_VARIABLE, raising=False)
        assert seed_from_environment() == default_seed.get()
        monkeypatch.setenv(SEED_ENVIRONMENT_VARIABLE, " ")
        with default_seed.set(7):
            assert seed_from_environment() == 7

    def test_invalid(self, monkeypatch):
        monkeypatch.setenv(SEED_ENVIRONMENT_VARIABLE, "abc")
        with pytest.raises(ValueError, match="LCZ_SEED"):
            seed_from_environment()
        monkeypatch.setenv(SEED_ENVIRONMENT_VARIABLE, "-3")
        with pytest.raises(ValueError):
            seed_from_environment()
