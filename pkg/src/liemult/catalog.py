"""Built-in algebra families and named fixtures.

The registry is immutable and built at import time.  The two classical small
filiform algebras carry their standard classification-table labels; the rest
use systematic names (filiform-n, abelian-n, heisenberg-3).
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass

from .algebra import LieAlgebra, build
from .errors import DimensionTooSmall, UnknownName
from .fields import QQ


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    params: tuple
    algebra: LieAlgebra
    known_multiplier_dim: int | None = None
    provenance: str | None = None
    aliases: tuple[str, ...] = ()


def standard_filiform(n: int, field=QQ) -> LieAlgebra:
    """The maximal-class algebra with [x1, xi] = x_{i+1} for 2 <= i <= n-1."""
    if n < 3:
        raise DimensionTooSmall(f"the filiform family starts at n=3, got n={n}")
    return build(n, [(1, i, i + 1, 1) for i in range(2, n)], field=field)


def abelian(n: int, field=QQ) -> LieAlgebra:
    if n < 1:
        raise DimensionTooSmall(f"abelian algebras need n >= 1, got n={n}")
    return build(n, [], field=field)


def heisenberg(field=QQ) -> LieAlgebra:
    """The 3-dimensional algebra with the single relation [x1, x2] = x3."""
    return build(3, [(1, 2, 3, 1)], field=field)


def _entries() -> tuple[CatalogEntry, ...]:
    return (
        CatalogEntry(
            name="heisenberg-3",
            family="filiform",
            params=(3,),
            algebra=heisenberg(),
            known_multiplier_dim=2,
            provenance="hand computation: C(3,2)=3, rank d2=1, rank d3=0",
            aliases=("filiform-3",),
        ),
        CatalogEntry(
            name="L(3,4,1,4)",
            family="filiform",
            params=(4,),
            algebra=standard_filiform(4),
            known_multiplier_dim=2,
            provenance="low-dimensional classification tables",
            aliases=("filiform-4",),
        ),
        CatalogEntry(
            name="L(7,5,1,7)",
            family="filiform",
            params=(5,),
            algebra=standard_filiform(5),
            known_multiplier_dim=3,
            provenance="low-dimensional classification tables",
            aliases=("filiform-5",),
        ),
        CatalogEntry(
            name="filiform-6",
            family="filiform",
            params=(6,),
            algebra=standard_filiform(6),
        ),
        CatalogEntry(
            name="filiform-7",
            family="filiform",
            params=(7,),
            algebra=standard_filiform(7),
        ),
        CatalogEntry(
            name="abelian-2",
            family="abelian",
            params=(2,),
            algebra=abelian(2),
            known_multiplier_dim=1,
            provenance="closed form C(n,2) for abelian algebras",
        ),
        CatalogEntry(
            name="abelian-3",
            family="abelian",
            params=(3,),
            algebra=abelian(3),
            known_multiplier_dim=3,
            provenance="closed form C(n,2) for abelian algebras",
        ),
    )


_ENTRIES = _entries()
_BY_NAME: dict[str, CatalogEntry] = {}
for _e in _ENTRIES:
    _BY_NAME[_e.name] = _e
    for _a in _e.aliases:
        _BY_NAME[_a] = _e


def entries() -> tuple[CatalogEntry, ...]:
    return _ENTRIES


def names(include_aliases: bool = False) -> tuple[str, ...]:
    if include_aliases:
        return tuple(_BY_NAME)
    return tuple(e.name for e in _ENTRIES)


def get(name: str) -> CatalogEntry:
    entry = _BY_NAME.get(name)
    if entry is None:
        suggestions = difflib.get_close_matches(name, list(_BY_NAME), n=3, cutoff=0.4)
        raise UnknownName(name, suggestions)
    return entry
