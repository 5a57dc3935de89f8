# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz.defaults
============

Run-time defaults shared by the checkers and the command-line tool.

Each default is an `~astropy.utils.state.ScienceState`, so it may be read
with ``get()`` and changed temporarily with ``set()``:

    >>> from lcz.defaults import working_order
    >>> working_order.get()
    16
    >>> with working_order.set(10):
    ...     print(working_order.get())
    10

"""

__all__ = [
    "working_order",
    "default_bound",
    "default_trials",
    "default_seed",
    "coefficient_sampler",
    "CoefficientSampler",
    "seed_from_environment",
    "SEED_ENVIRONMENT_VARIABLE",
]

import os
from dataclasses import dataclass
from typing import Optional, Tuple

from astropy.utils.state import ScienceState

SEED_ENVIRONMENT_VARIABLE = "LCZ_SEED"


def _natural(name, value, minimum=0):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer.")
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}.")
    return value


class working_order(ScienceState):
    """Get/set the default truncation order of generated and checked series."""

    _value = 16

    @classmethod
    def validate(cls, value):
        return _natural("working_order", value, 1)


class default_bound(ScienceState):
    """Get/set the default bound M of tabulated arithmetical functions."""

    _value = 200

    @classmethod
    def validate(cls, value):
        return _natural("default_bound", value, 1)


class default_trials(ScienceState):
    """Get/set the default number of randomized trials per condition."""

    _value = 50

    @classmethod
    def validate(cls, value):
        return _natural("default_trials", value, 1)


class default_seed(ScienceState):
    """Get/set the seed used when none is given explicitly.

    The ``LCZ_SEED`` environment variable takes precedence, see
    `seed_from_environment`.

    """

    _value = 42

    @classmethod
    def validate(cls, value):
        return _natural("default_seed", value)


@dataclass(frozen=True)
class CoefficientSampler:
    """Distribution of random rational coefficients.

    Numerators are uniform on ``numerators`` (inclusive), denominators
    uniform on ``denominators``.

    """

    numerators: Tuple[int, int] = (-5, 5)
    denominators: Tuple[int, ...] = (1, 2, 3)

    def __post_init__(self):
        lo, hi = self.numerators
        if lo > hi:
            raise ValueError("numerator range is empty.")
        if len(self.denominators) == 0 or min(self.denominators) < 1:
            raise ValueError("denominators must be positive integers.")


class coefficient_sampler(ScienceState):
    """Get/set the distribution of randomized test coefficients.

    >>> from lcz.defaults import coefficient_sampler, CoefficientSampler
    >>> coefficient_sampler.get().numerators
    (-5, 5)
    >>> with coefficient_sampler.set(CoefficientSampler((-2, 2), (1,))):
    ...     print(coefficient_sampler.get().denominators)
    (1,)

    """

    _value = CoefficientSampler()

    @classmethod
    def validate(cls, value):
        if not isinstance(value, CoefficientSampler):
            raise TypeError(
                "coefficient_sampler must be a CoefficientSampler instance.")
        return value


def seed_from_environment(seed: Optional[int] = None) -> int:
    """Resolve the seed for a randomized run.


    Parameters
    ----------
    seed : int, optional
        An explicit seed, returned unchanged.


    Returns
    -------
    seed : int
        ``seed`` if given, else the integer in ``LCZ_SEED`` if set, else
        ``default_seed.get()``.

    """

    if seed is not None:
        return _natural("seed", seed)

    text = os.environ.get(SEED_ENVIRONMENT_VARIABLE)
    if text is not None and text.strip() != "":
        try:
            return _natural(SEED_ENVIRONMENT_VARIABLE, int(text))
        except ValueError:
            raise ValueError(
                f"{SEED_ENVIRONMENT_VARIABLE} must be a non-negative "
                f"integer, got {text!r}."
            ) from None

    return default_seed.get()
