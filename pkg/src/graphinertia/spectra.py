"""Adjacency inertia: exact via congruence, approximate via a Jacobi eigensolver."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from ._pykernels import inertia_rational
from .errors import InvalidArgument, NumericFailure
from .graph import Graph

# Fraction is the exact rational used throughout the congruence reduction
Rational = Fraction

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class Inertia(NamedTuple):
    """(p, n_neg, eta): counts of positive, negative and zero eigenvalues."""

    p: int
    n_neg: int
    eta: int

    @property
    def order(self) -> int:
        return self.p + self.n_neg + self.eta

    @property
    def rank(self) -> int:
        return self.p + self.n_neg

    def __add__(self, other):  # componentwise, not tuple concatenation
        return Inertia(self.p + other.p, self.n_neg + other.n_neg, self.eta + other.eta)

    def __str__(self):
        return f"p={self.p} n={self.n_neg} eta={self.eta}"


@dataclass(frozen=True)
class SpectrumF:
    values: tuple[float, ...]
    tol: float = 1e-6

    def inertia(self) -> Inertia:
        p = sum(1 for x in self.values if x > self.tol)
        neg = sum(1 for x in self.values if x < -self.tol)
        return Inertia(p, neg, len(self.values) - p - neg)


def inertia_exact(g: Graph) -> Inertia:
    if g.order == 0:
        return Inertia(0, 0, 0)
    return Inertia(*kernels.inertia_counts(g.adj, g.order))


def inertia_of_matrix(matrix: Sequence[Sequence]) -> Inertia:
    """Exact inertia of any symmetric integer or rational matrix."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    for i in range(n):
        if len(a[i]) != n or any(a[i][j] != a[j][i] for j in range(n)):
            raise InvalidArgument("matrix must be square and symmetric")
    return Inertia(*inertia_rational(a))


def jacobi_eigenvalues(a: np.ndarray, tol: float = JACOBI_TOL,
                       max_sweeps: int = JACOBI_MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm falls below ``tol``.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2) * 2)
        if off < tol:
            return np.sort(np.diag(a))[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise NumericFailure(f"Jacobi did not converge in {max_sweeps} sweeps")


def eigenvalues_float(g: Graph, tol: float = 1e-6) -> SpectrumF:
    if g.order < 1:
        raise InvalidArgument("spectrum needs at least one vertex")
    vals = jacobi_eigenvalues(np.array(g.matrix(), dtype=float))
    return SpectrumF(tuple(float(x) for x in vals), tol)


def inertia_float(g: Graph, tol: float = 1e-6) -> Inertia:
    if tol <= 0:
        raise InvalidArgument("tolerance must be positive")
    if g.order == 0:
        return Inertia(0, 0, 0)
    return eigenvalues_float(g, tol).inertia()


def multipartite_inertia(parts: Sequence[int]) -> Inertia:
    """Closed-form inertia of K_{n_1,...,n_s}.

    With an edge (s >= 2) it is (1, s - 1, sum(n_i) - s); a single part is
    edgeless and all of its eigenvalues vanish.
    """
    if not parts or any(x < 1 for x in parts):
        raise InvalidArgument("need at least one positive part")
    s = len(parts)
    total = sum(parts)
    if s == 1:
        return Inertia(0, 0, total)
    return Inertia(1, s - 1, total - s)
