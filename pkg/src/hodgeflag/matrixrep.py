"""Exact matrix realization of so(2l), so(2l+1) and sp(2l).

This is the ground-truth oracle: root vectors are integer matrices in the
defining representation, brackets are exact integer commutators, and every
combinatorial claim made elsewhere in the package is checked against spans
of these matrices.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .roots import Root, RootSystem, root_str

Matrix = np.ndarray


def ambient_dim(group_type: str, rank: int) -> int:
    return 2 * rank + 1 if group_type == "B" else 2 * rank


def _shift(group_type: str, rank: int) -> int:
    # e_{i} pairs with e_{L+i}; type B has the extra middle line at l+1.
    return rank + 1 if group_type == "B" else rank


def form_matrix(group_type: str, rank: int) -> Matrix:
    """The defining bilinear form: anti-identity blocks, symplectic for C."""
    n = ambient_dim(group_type, rank)
    l = rank
    F = np.zeros((n, n), dtype=np.int64)
    if group_type == "B":
        for i in range(l):
            F[i, l + 1 + i] = 1
            F[l + 1 + i, i] = 1
        F[l, l] = 1
    elif group_type == "D":
        for i in range(l):
            F[i, l + i] = 1
            F[l + i, i] = 1
    elif group_type == "C":
        for i in range(l):
            F[i, l + i] = 1
            F[l + i, i] = -1
    else:
        raise ValueError(f"no defining form for type {group_type}")
    return F


def satisfies_form(M: Matrix, group_type: str, rank: int) -> bool:
    """Check gF + Fg^t = 0 for the defining form F."""
    F = form_matrix(group_type, rank)
    return bool(np.array_equal(M @ F + F @ M.T, np.zeros_like(F)))


def weight_of_position(q: int, group_type: str, rank: int) -> Root:
    """Weight of the basis line e_q (1-based) as an epsilon coefficient vector."""
    l = rank
    L = _shift(group_type, rank)
    v = [0] * l
    if group_type == "B" and q == l + 1:
        return tuple(v)
    if q <= l:
        v[q - 1] = 1
    else:
        v[q - L - 1] = -1
    return tuple(v)


def root_of_position(r: int, c: int, group_type: str, rank: int) -> Optional[Root]:
    """Root carried by matrix position (r, c), or None on the Cartan diagonal."""
    wr = weight_of_position(r, group_type, rank)
    wc = weight_of_position(c, group_type, rank)
    alpha = tuple(a - b for a, b in zip(wr, wc))
    return alpha if any(alpha) else None


def _support(alpha: Root, group_type: str, rank: int) -> List[Tuple[int, int, int]]:
    """Support positions (row, col, entry) of the canonical root matrix, 1-based.

    The leading position in row-major order carries +1; the partner entry is
    forced by the defining-form constraint.
    """
    l = rank
    L = _shift(group_type, rank)
    nz = [(i + 1, c) for i, c in enumerate(alpha) if c != 0]
    symplectic = group_type == "C"
    if len(nz) == 2:
        (i, ci), (j, cj) = nz
        if ci == 1 and cj == -1:
            return [(i, j, 1), (L + j, L + i, -1)]
        if ci == -1 and cj == 1:
            return [(j, i, 1), (L + i, L + j, -1)]
        if ci == 1 and cj == 1:
            return [(i, L + j, 1), (j, L + i, 1 if symplectic else -1)]
        if ci == -1 and cj == -1:
            return [(L + i, j, 1), (L + j, i, 1 if symplectic else -1)]
    elif len(nz) == 1:
        (i, c) = nz[0]
        if group_type == "C":
            if c == 2:
                return [(i, L + i, 1)]
            if c == -2:
                return [(L + i, i, 1)]
        elif group_type == "B":
            if c == 1:
                return [(i, l + 1, 1), (l + 1, L + i, -1)]
            if c == -1:
                return [(l + 1, i, 1), (L + i, l + 1, -1)]
    raise ValueError(f"{root_str(alpha)} is not a root of type {group_type}")


def root_matrix(alpha: Root, group_type: str, rank: int) -> Matrix:
    """Canonical integer root vector for alpha in the defining representation."""
    n = ambient_dim(group_type, rank)
    M = np.zeros((n, n), dtype=np.int64)
    for r, c, v in _support(alpha, group_type, rank):
        M[r - 1, c - 1] = v
    return M


def cartan_matrix_rep(diag: Sequence[int], group_type: str, rank: int) -> Matrix:
    """diag(a_1..a_l, [0,] -a_1..-a_l) as an algebra element."""
    if len(diag) != rank:
        raise ValueError("need one diagonal value per epsilon coordinate")
    n = ambient_dim(group_type, rank)
    L = _shift(group_type, rank)
    M = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(diag):
        M[i, i] = a
        M[L + i, L + i] = -a
    return M


def bracket(M1: Matrix, M2: Matrix) -> Matrix:
    """Exact commutator M1 M2 - M2 M1."""
    if M1.shape != M2.shape:
        raise ValueError(f"shape mismatch {M1.shape} vs {M2.shape}")
    return M1 @ M2 - M2 @ M1


def decompose(M: Matrix, system: RootSystem) -> Tuple[Tuple[int, ...], Dict[Root, int]]:
    """Write an algebra element as Cartan part plus root-vector coefficients.

    Raises if M is not in the algebra spanned by the Cartan and the canonical
    root vectors (exact reconstruction is enforced).
    """
    gt, l = system.group_type, system.rank
    coeffs: Dict[Root, int] = {}
    recon = np.zeros_like(M)
    for alpha in system.sorted_roots():
        sup = _support(alpha, gt, l)
        r0, c0, v0 = sup[0]
        c = int(M[r0 - 1, c0 - 1]) * v0
        if c != 0:
            coeffs[alpha] = c
            for r, cc, v in sup:
                recon[r - 1, cc - 1] += c * v
    diag = tuple(int(M[i, i]) for i in range(l))
    recon += cartan_matrix_rep(diag, gt, l)
    if not np.array_equal(M, recon):
        raise ValueError("matrix is not an element of the algebra")
    return diag, coeffs


# ---------------------------------------------------------------------------
# Exact span arithmetic over root/Cartan coordinates.

def _rref(rows: List[List[Fraction]]) -> List[List[Fraction]]:
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        pr = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                pr = r
                break
        if pr is None:
            continue
        rows[pivot_row], rows[pr] = rows[pr], rows[pivot_row]
        piv = rows[pivot_row][col]
        rows[pivot_row] = [x / piv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [r for r in rows[:pivot_row] if any(r)]


@dataclass
class Span:
    """An exact subspace of the algebra in (Cartan, root) coordinates."""

    system: RootSystem
    basis: List[List[Fraction]]
    coords: Tuple[object, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def span_of_matrices(mats: Iterable[Matrix], system: RootSystem) -> Span:
    """Exact span of algebra elements; coordinates are fixed by the system."""
    l = system.rank
    roots = system.sorted_roots()
    coords: Tuple[object, ...] = tuple(f"h{i}" for i in range(l)) + roots
    index = {c: k for k, c in enumerate(coords)}
    rows: List[List[Fraction]] = []
    for M in mats:
        diag, cf = decompose(M, system)
        row = [Fraction(0)] * len(coords)
        for i, a in enumerate(diag):
            row[i] = Fraction(a)
        for alpha, c in cf.items():
            row[index[alpha]] = Fraction(c)
        rows.append(row)
    return Span(system, _rref(rows), coords)


def span_of_roots(alphas: Iterable[Root], system: RootSystem) -> Span:
    gt, l = system.group_type, system.rank
    return span_of_matrices([root_matrix(a, gt, l) for a in alphas], system)


def spans_equal(a: Span, b: Span) -> bool:
    return a.coords == b.coords and a.basis == b.basis


def is_abelian_span(mats: Sequence[Matrix]) -> bool:
    """True iff all pairwise commutators of the given matrices vanish."""
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if np.any(bracket(mats[i], mats[j])):
                return False
    return True
