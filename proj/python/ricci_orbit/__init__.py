"""Exact Ricci iteration of radial Kahler metrics on CP^1.

Potentials and densities are given either as shorthand expressions in x
(optionally in a parameter a, e.g. "1 + a*x + x^2" with a="3/2") or as
mappings: {"f": [...], "h": [...]} for log(f/h), {"num": [...], "den": [...]}
for a density. Coefficients are exact rationals written as strings.
"""

import json
from typing import Any, Mapping, Optional, Union

from . import _core
from ._core import RicciOrbitError, SizeLimitExceeded

Input = Union[str, Mapping[str, Any]]

__all__ = [
    "RicciOrbitError",
    "SizeLimitExceeded",
    "hessian_density",
    "ricci",
    "iterate",
    "check_kahler",
    "is_einstein",
    "ricci_potential",
    "is_projectively_induced",
    "symplectic_volume",
    "kahler_interval",
]


def _text(value: Input) -> str:
    return value if isinstance(value, str) else json.dumps(value)


def _param(a) -> Optional[str]:
    return None if a is None else str(a)


def _load(text: Optional[str]):
    return None if text is None else json.loads(text)


def hessian_density(potential: Input, a=None) -> dict:
    """Density v with (i/2) ddbar(phi) = (i/2) v dz ^ dzbar."""
    return json.loads(_core.hessian_density(_text(potential), _param(a)))


def ricci(density: Input, a=None) -> Optional[dict]:
    """Ricci density, or None when the form is Ricci-flat."""
    return _load(_core.ricci(_text(density), _param(a)))


def iterate(density: Input, k: int = 3, sign: str = "+", a=None) -> dict:
    return json.loads(_core.iterate(_text(density), k, sign, _param(a)))


def check_kahler(density: Input, a=None) -> dict:
    return json.loads(_core.check_kahler(_text(density), _param(a)))


def is_einstein(density: Input, a=None) -> Optional[str]:
    """Einstein constant as an exact rational string, or None."""
    return _core.is_einstein(_text(density), _param(a))


def ricci_potential(potential: Input, a=None) -> dict:
    return json.loads(_core.ricci_potential(_text(potential), _param(a)))


def is_projectively_induced(potential: Input, a=None) -> dict:
    return json.loads(_core.is_projectively_induced(_text(potential), _param(a)))


def symplectic_volume(density: Input, a=None) -> dict:
    return json.loads(_core.symplectic_volume(_text(density), _param(a)))


def kahler_interval(
    k: int,
    lo="0",
    hi="2",
    resolution="1/10000",
    jobs: int = 1,
    family: Optional[str] = None,
    evidence: bool = False,
) -> dict:
    """Parameter values a in [lo, hi] whose first k Ricci iterates stay Kahler."""
    return json.loads(
        _core.kahler_interval(k, str(lo), str(hi), str(resolution), jobs, family, evidence)
    )
