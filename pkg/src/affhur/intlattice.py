"""Integer lattices as canonical Hermite-normal-form bases.

Equality of stored bases is equality of lattices; all arithmetic is over
arbitrary-precision integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .linalg import Mat, hnf, hnf_contains, hnf_reduce, mat_det, smith_normal_form
from .rootsys import Root, RootSystem, RootSystemError, coroot, reflect

INFINITE = math.inf


@dataclass(frozen=True)
class IntegerLattice:
    ambient_rank: int
    basis: Mat  # r x n, canonical HNF, r <= n

    @property
    def rank(self) -> int:
        return len(self.basis)


def span(vectors, ambient_rank: int) -> IntegerLattice:
    """Canonical HNF basis of the integer span; empty input is the zero lattice."""
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient_rank:
            raise ValueError(f"vector {v} does not have length {ambient_rank}")
    return IntegerLattice(ambient_rank, hnf(vectors, ambient_rank))


def full_lattice(ambient_rank: int) -> IntegerLattice:
    basis = tuple(tuple(1 if i == j else 0 for j in range(ambient_rank))
                  for i in range(ambient_rank))
    return IntegerLattice(ambient_rank, basis)


def contains(lattice: IntegerLattice, v) -> bool:
    if len(v) != lattice.ambient_rank:
        raise ValueError("dimension mismatch")
    return hnf_contains(lattice.basis, v)


def reduce_mod(lattice: IntegerLattice, v):
    """Canonical residue of v modulo the lattice."""
    return hnf_reduce(lattice.basis, v)


def lattice_equal(l1: IntegerLattice, l2: IntegerLattice) -> bool:
    return l1.ambient_rank == l2.ambient_rank and l1.basis == l2.basis


def is_sublattice(sub: IntegerLattice, sup: IntegerLattice) -> bool:
    return all(contains(sup, row) for row in sub.basis)


def index(sub: IntegerLattice, sup: IntegerLattice):
    """Index [sup : sub]; INFINITE when the ranks differ.

    Raises ValueError unless sub is contained in sup.
    """
    if not is_sublattice(sub, sup):
        raise ValueError("first lattice is not contained in the second")
    if sub.rank < sup.rank:
        return INFINITE
    # express sub basis rows over the sup basis and take |det|
    coeffs = []
    for row in sub.basis:
        w = list(row)
        c = [0] * sup.rank
        for i, brow in enumerate(sup.basis):
            pcol = next(j for j, x in enumerate(brow) if x != 0)
            q, r = divmod(w[pcol], brow[pcol])
            assert r == 0
            c[i] = q
            for j in range(len(w)):
                w[j] -= q * brow[j]
        assert not any(w)
        coeffs.append(tuple(c))
    det = mat_det(tuple(coeffs))
    return abs(int(det))


def connection_index(rs: RootSystem) -> int:
    """|P(Phi)/L(Phi)| = |det(Cartan matrix)|, via Smith normal form."""
    divisors, _, _ = smith_normal_form(rs.cartan)
    prod = 1
    for d in divisors:
        prod *= d
    return abs(prod)


def smallest_subsystem(rs: RootSystem, roots) -> frozenset[Root]:
    """Closure of a root set under reflections by its own reflection subgroup.

    Fixed point of R -> R union s_beta(R); equals the smallest root
    subsystem containing R.
    """
    roots = list(roots)
    if not roots:
        raise RootSystemError("smallest_subsystem needs a non-empty root set")
    closed: set[Root] = set()
    for r in roots:
        closed.add(r)
        closed.add(-r)
    changed = True
    while changed:
        changed = False
        current = list(closed)
        for a in current:
            for b in current:
                c = reflect(rs, a, b)
                if c not in closed:
                    closed.add(c)
                    changed = True
    return frozenset(closed)


def root_span(rs: RootSystem, roots) -> IntegerLattice:
    return span([r.coords for r in roots], rs.rank)


def coroot_span(rs: RootSystem, roots) -> IntegerLattice:
    return span([coroot(rs, r).coords for r in roots], rs.rank)
