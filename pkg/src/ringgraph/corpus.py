"""Named rings used by the verification suite and the command line."""

from __future__ import annotations

import os
import re
from functools import lru_cache
from typing import Callable

from .ringcore import (
    FiniteRing,
    load_ring,
    make_direct_product,
    make_E,
    make_F,
    make_matrix_ring_2x2,
    make_upper_triangular_2x2,
    make_Zn,
)


def _product(a: str, b: str) -> Callable[[], FiniteRing]:
    return lambda: make_direct_product(get_ring(a), get_ring(b))


REGISTRY: dict[str, tuple[Callable[[], FiniteRing], str]] = {}

for _n in range(1, 10):
    REGISTRY[f"Z{_n}"] = (lambda n=_n: make_Zn(n), f"integers mod {_n}")
REGISTRY.update({
    "E4": (lambda: make_E(2), "E(4) = <a,b : 2a=2b=0, a^2=a, b^2=b, ab=a, ba=b>"),
    "F4": (lambda: make_F(2), "F(4) = <x,y : 2x=2y=0, x^2=x, y^2=y, xy=y, yx=x>"),
    "E9": (lambda: make_E(3), "E(9), the order-9 E ring"),
    "F9": (lambda: make_F(3), "F(9), the order-9 F ring"),
    "E25": (lambda: make_E(5), "E(25); commutators of additive order 5"),
    "F25": (lambda: make_F(5), "F(25)"),
    "E27r3": (lambda: make_E(3, rank=3), "rank-3 E ring over Z3 (xy = s(y)x); trivial centre"),
    "UT2Z2": (lambda: make_upper_triangular_2x2(2), "upper-triangular 2x2 matrices over Z2"),
    "UT2Z3": (lambda: make_upper_triangular_2x2(3), "upper-triangular 2x2 matrices over Z3"),
    "M2Z2": (lambda: make_matrix_ring_2x2(2), "all 2x2 matrices over Z2"),
    "Z2xE4": (_product("Z2", "E4"), "Z2 x E(4); centre of order 2"),
    "E4xF4": (_product("E4", "F4"), "E(4) x F(4)"),
    "Z3xE4": (_product("Z3", "E4"), "Z3 x E(4); order 12"),
    "Z5xE4": (_product("Z5", "E4"), "Z5 x E(4); order 20"),
    "Z2xE9": (_product("Z2", "E9"), "Z2 x E(9); order 18"),
})

DEFAULT_CORPUS = (
    [f"Z{n}" for n in range(1, 10)]
    + ["E4", "F4", "E9", "F9", "E25", "F25", "E27r3",
       "UT2Z2", "UT2Z3", "M2Z2", "Z2xE4", "E4xF4", "Z3xE4", "Z5xE4", "Z2xE9"]
)


@lru_cache(maxsize=None)
def get_ring(name: str) -> FiniteRing:
    if name not in REGISTRY:
        raise KeyError(f"unknown ring {name!r}; try one of {', '.join(REGISTRY)}")
    return REGISTRY[name][0]()


def resolve_ring(spec: str) -> FiniteRing:
    """A registry name, or a path to a ring file."""
    if spec in REGISTRY:
        return get_ring(spec)
    if os.path.exists(spec):
        return load_ring(spec)
    raise KeyError(f"{spec!r} is neither a known ring nor a ring file")


def expand_names(spec: str) -> list[str]:
    """Expand ``default``, ``Z2..Z9`` ranges and comma-separated lists."""
    out: list[str] = []
    for part in (p.strip() for p in spec.split(",")):
        if not part:
            continue
        if part == "default":
            out.extend(DEFAULT_CORPUS)
            continue
        m = re.fullmatch(r"([A-Za-z]+)(\d+)\.\.\1?(\d+)", part)
        if m:
            prefix, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
            out.extend(f"{prefix}{k}" for k in range(lo, hi + 1))
        else:
            out.append(part)
    return out


def load_corpus(specs: list[str] | str = "default") -> list[FiniteRing]:
    if isinstance(specs, str):
        specs = [specs]
    names = [n for s in specs for n in expand_names(s)]
    return [resolve_ring(n) for n in names]


def default_corpus() -> list[FiniteRing]:
    return [get_ring(n) for n in DEFAULT_CORPUS]
