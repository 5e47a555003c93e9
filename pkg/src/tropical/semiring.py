"""The five tropical semirings and their scalar kernels.

Values are 32-bit signed integers. The two extreme representable values are
reserved sentinels for -infinity and +infinity; finite values live in the
closed range [NEG_INF + 1, POS_INF - 1]. Plus-style multiplication saturates
into that finite range (computed in a wider intermediate), so no sequence of
operations on finite operands can ever produce a sentinel by accident.
"""

from __future__ import annotations

import enum
from typing import Callable

NEG_INF = -(2**31)
POS_INF = 2**31 - 1
FINITE_MIN = NEG_INF + 1
FINITE_MAX = POS_INF - 1


class SemiringId(enum.Enum):
    MAXPLUS = 0   # (max, +)   scheduling, longest paths
    MINPLUS = 1   # (min, +)   shortest paths
    MAXMIN = 2    # (max, min) bottleneck / bandwidth paths
    MINMAX = 3    # (min, max) reliability paths
    BOOLEAN = 4   # (or, and)  reachability


SEMIRING_TOKENS = {
    "maxplus": SemiringId.MAXPLUS,
    "minplus": SemiringId.MINPLUS,
    "maxmin": SemiringId.MAXMIN,
    "minmax": SemiringId.MINMAX,
    "boolean": SemiringId.BOOLEAN,
}

TOKEN_OF = {s: t for t, s in SEMIRING_TOKENS.items()}

_ZERO = {
    SemiringId.MAXPLUS: NEG_INF,
    SemiringId.MINPLUS: POS_INF,
    SemiringId.MAXMIN: NEG_INF,
    SemiringId.MINMAX: POS_INF,
    SemiringId.BOOLEAN: 0,
}

_ONE = {
    SemiringId.MAXPLUS: 0,
    SemiringId.MINPLUS: 0,
    SemiringId.MAXMIN: POS_INF,
    SemiringId.MINMAX: NEG_INF,
    SemiringId.BOOLEAN: 1,
}


def parse_semiring(token: str) -> SemiringId:
    """Map a lowercase file/CLI token to a SemiringId."""
    try:
        return SEMIRING_TOKENS[token]
    except KeyError:
        raise ValueError(f"unknown semiring token {token!r}") from None


def zero(s: SemiringId) -> int:
    """Additive identity (and multiplicative annihilator) of semiring s."""
    return _ZERO[s]


def one(s: SemiringId) -> int:
    """Multiplicative identity of semiring s."""
    return _ONE[s]


def add(a: int, b: int, s: SemiringId) -> int:
    """Semiring addition a (+) b."""
    if s is SemiringId.MAXPLUS or s is SemiringId.MAXMIN:
        return a if a > b else b
    if s is SemiringId.MINPLUS or s is SemiringId.MINMAX:
        return a if a < b else b
    return a | b


def mul(a: int, b: int, s: SemiringId) -> int:
    """Semiring multiplication a (x) b with sentinel-safe saturation."""
    if s is SemiringId.MAXPLUS:
        if a == NEG_INF or b == NEG_INF:
            return NEG_INF
        v = a + b
        return FINITE_MAX if v > FINITE_MAX else (FINITE_MIN if v < FINITE_MIN else v)
    if s is SemiringId.MINPLUS:
        if a == POS_INF or b == POS_INF:
            return POS_INF
        v = a + b
        return FINITE_MAX if v > FINITE_MAX else (FINITE_MIN if v < FINITE_MIN else v)
    if s is SemiringId.MAXMIN:
        return a if a < b else b
    if s is SemiringId.MINMAX:
        return a if a > b else b
    return a & b


def natural_leq(a: int, b: int, s: SemiringId) -> bool:
    """Natural partial order of an idempotent semiring: a <= b iff a (+) b == b."""
    return add(a, b, s) == b


def add_fn(s: SemiringId) -> Callable[[int, int], int]:
    """Specialized scalar (+) for tight loops (identical semantics to add)."""
    if s is SemiringId.MAXPLUS or s is SemiringId.MAXMIN:
        return lambda a, b: a if a > b else b
    if s is SemiringId.MINPLUS or s is SemiringId.MINMAX:
        return lambda a, b: a if a < b else b
    return lambda a, b: a | b


def mul_fn(s: SemiringId) -> Callable[[int, int], int]:
    """Specialized scalar (x) for tight loops (identical semantics to mul)."""
    if s is SemiringId.MAXPLUS:
        def f(a, b, _neg=NEG_INF, _lo=FINITE_MIN, _hi=FINITE_MAX):
            if a == _neg or b == _neg:
                return _neg
            v = a + b
            return _hi if v > _hi else (_lo if v < _lo else v)
        return f
    if s is SemiringId.MINPLUS:
        def f(a, b, _pos=POS_INF, _lo=FINITE_MIN, _hi=FINITE_MAX):
            if a == _pos or b == _pos:
                return _pos
            v = a + b
            return _hi if v > _hi else (_lo if v < _lo else v)
        return f
    if s is SemiringId.MAXMIN:
        return lambda a, b: a if a < b else b
    if s is SemiringId.MINMAX:
        return lambda a, b: a if a > b else b
    return lambda a, b: a & b
