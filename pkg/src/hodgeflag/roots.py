"""Exact root systems of the classical Lie algebras in epsilon coordinates.

A root is a tuple of small integers, the coefficients of (e_1, ..., e_l) for
a fixed Cartan subalgebra of diagonal type.  Everything here is exact integer
arithmetic; no root is ever represented approximately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

Root = Tuple[int, ...]

GROUP_TYPES = ("A", "B", "C", "D")


def root_str(alpha: Root) -> str:
    """Render a root as a signed combination, e.g. ``e1-e2`` or ``-2e3``."""
    parts = []
    for i, c in enumerate(alpha, start=1):
        if c == 0:
            continue
        sign = "+" if c > 0 else "-"
        mag = abs(c)
        coeff = "" if mag == 1 else str(mag)
        parts.append(f"{sign}{coeff}e{i}")
    if not parts:
        return "0"
    out = "".join(parts)
    return out[1:] if out.startswith("+") else out


@dataclass(frozen=True)
class RootSystem:
    """A classical root system with a fixed choice of positive/simple roots."""

    group_type: str
    rank: int
    all_roots: frozenset[Root]
    positive: frozenset[Root]
    simple: Tuple[Root, ...]

    def __contains__(self, alpha: Root) -> bool:
        return alpha in self.all_roots

    @property
    def negative(self) -> frozenset[Root]:
        return frozenset(neg(a) for a in self.positive)

    def sorted_roots(self) -> Tuple[Root, ...]:
        return tuple(sorted(self.all_roots))


def neg(alpha: Root) -> Root:
    return tuple(-c for c in alpha)


def _unit(l: int, i: int, c: int = 1) -> Root:
    v = [0] * l
    v[i] = c
    return tuple(v)


def _pair(l: int, i: int, j: int, ci: int, cj: int) -> Root:
    v = [0] * l
    v[i] = ci
    v[j] = cj
    return tuple(v)


def build_root_system(group_type: str, rank: int) -> RootSystem:
    """Build the root system of type A/B/C/D at the given rank.

    Type A with rank l is the system A_{l-1} realized on l coordinates.
    Rank 1 is permitted for every type; D_1 is the empty (abelian) system.
    """
    if group_type not in GROUP_TYPES:
        raise ValueError(f"unknown group type {group_type!r}; expected one of {GROUP_TYPES}")
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    l = rank
    pos: list[Root] = []
    if group_type == "A":
        pos = [_pair(l, i, j, 1, -1) for i in range(l) for j in range(i + 1, l)]
        simple = tuple(_pair(l, i, i + 1, 1, -1) for i in range(l - 1))
    elif group_type == "D":
        pos = [_pair(l, i, j, 1, s) for i in range(l) for j in range(i + 1, l) for s in (-1, 1)]
        simple_list = [_pair(l, i, i + 1, 1, -1) for i in range(l - 1)]
        if l >= 2:
            simple_list.append(_pair(l, l - 2, l - 1, 1, 1))
        simple = tuple(simple_list)
    elif group_type == "B":
        pos = [_pair(l, i, j, 1, s) for i in range(l) for j in range(i + 1, l) for s in (-1, 1)]
        pos += [_unit(l, i) for i in range(l)]
        simple = tuple([_pair(l, i, i + 1, 1, -1) for i in range(l - 1)] + [_unit(l, l - 1)])
    else:  # C
        pos = [_pair(l, i, j, 1, s) for i in range(l) for j in range(i + 1, l) for s in (-1, 1)]
        pos += [_unit(l, i, 2) for i in range(l)]
        simple = tuple([_pair(l, i, i + 1, 1, -1) for i in range(l - 1)] + [_unit(l, l - 1, 2)])
    positive = frozenset(pos)
    all_roots = positive | frozenset(neg(a) for a in positive)
    return RootSystem(group_type, rank, all_roots, positive, simple)


def add_roots(alpha: Root, beta: Root, system: RootSystem) -> Optional[Root]:
    """Return alpha + beta if the sum is again a root, else None."""
    if alpha not in system.all_roots:
        raise ValueError(f"{root_str(alpha)} is not a root of {system.group_type}_{system.rank}")
    if beta not in system.all_roots:
        raise ValueError(f"{root_str(beta)} is not a root of {system.group_type}_{system.rank}")
    s = tuple(a + b for a, b in zip(alpha, beta))
    return s if s in system.all_roots else None


def is_commutative(psi: Iterable[Root], system: RootSystem) -> bool:
    """True iff no two distinct roots of psi sum to a root.

    The quantifier runs over unordered pairs with alpha != beta; the span of
    a commutative set with no opposite pair is an abelian subalgebra.
    """
    roots = sorted(set(psi))
    for alpha in roots:
        if alpha not in system.all_roots:
            raise ValueError(f"{root_str(alpha)} is not a root of the system")
    for i, alpha in enumerate(roots):
        for beta in roots[i + 1:]:
            s = tuple(a + b for a, b in zip(alpha, beta))
            if s in system.all_roots:
                return False
    return True


def root_count(group_type: str, rank: int) -> int:
    """Closed-form number of roots: l(l-1) for A, 2l^2 for B/C, 2l(l-1) for D."""
    l = rank
    if group_type == "A":
        return l * (l - 1)
    if group_type in ("B", "C"):
        return 2 * l * l
    return 2 * l * (l - 1)
