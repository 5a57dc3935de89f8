# Licensed under a 3-clause BSD style license - see LICENSE.rst
"""
lcz utils module

JSON document helpers shared by the series, function, and binomial-type
file formats.

"""

__all__ = [
    "read_json",
    "write_json",
    "require_keys",
    "rationals_from_json",
    "rationals_to_json",
]

import json
from typing import Any, Iterable, List, Mapping, Sequence

from ..exceptions import SchemaError
from ..exactnum import RationalFormatError, format_rational, parse_rational


def read_json(path) -> Any:
    """Load a JSON document.


    Parameters
    ----------
    path : str or path-like
        File name.


    Raises
    ------

    `~lcz.exceptions.SchemaError`
        If the file is not valid JSON.

    """

    with open(path, "r") as inf:
        try:
            return json.load(inf)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: invalid JSON ({exc})") from None


def write_json(document: Any, path=None) -> str:
    """Serialize ``document``, and write it to ``path`` if given.


    Returns
    -------
    text : str
        The JSON text, newline terminated.

    """

    text = json.dumps(document, indent=2) + "\n"
    if path is not None:
        with open(path, "w") as outf:
            outf.write(text)
    return text


def require_keys(document: Any, keys: Iterable[str], kind: str) -> None:
    """Verify ``document`` is an object holding all ``keys``.

    >>> from lcz.utils import require_keys
    >>> require_keys({"order": 1}, ["order", "coeffs"], "series")
    Traceback (most recent call last):
    ...
    lcz.exceptions.SchemaError: series document is missing 'coeffs'

    """

    if not isinstance(document, Mapping):
        raise SchemaError(f"{kind} document must be a JSON object")
    for key in keys:
        if key not in document:
            raise SchemaError(f"{kind} document is missing {key!r}")


def rationals_from_json(values: Any, what: str) -> List:
    """Parse a JSON list of rational strings (integers are tolerated)."""

    if not isinstance(values, list):
        raise SchemaError(f"{what} must be a list")

    parsed = []
    for i, value in enumerate(values):
        if isinstance(value, int) and not isinstance(value, bool):
            value = str(value)
        try:
            parsed.append(parse_rational(value))
        except RationalFormatError as exc:
            raise SchemaError(f"{what}[{i}]: {exc}") from None
    return parsed


def rationals_to_json(values: Sequence) -> List[str]:
    return [format_rational(x) for x in values]
