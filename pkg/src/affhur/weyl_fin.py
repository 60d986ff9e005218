"""Finite Weyl group elements, absolute length and reduced factorizations.

Elements are integer matrices acting on root-lattice coordinates; the
companion matrix acting on coroot coordinates is carried along so that
group operations never need the root system.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import (Mat, identity_mat, mat_inv_int, mat_mul, mat_vec,
                     rational_rank, solve_rational)
from .intlattice import (coroot_span, full_lattice, lattice_equal, root_span,
                         smallest_subsystem)
from .rootsys import Root, RootSystem, RootSystemError, coroot


@dataclass(frozen=True)
class FiniteWeylElement:
    matrix: Mat    # action on root coordinates
    comatrix: Mat  # action on coroot coordinates; both compare, so elements of
                   # different root systems sharing a matrix stay distinct

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return FiniteWeylElement(mat_mul(self.matrix, other.matrix),
                                 mat_mul(self.comatrix, other.comatrix))

    def inverse(self) -> "FiniteWeylElement":
        return _inverse_cached(self)

    def __hash__(self) -> int:
        return hash((self.matrix, self.comatrix))

    def act_root(self, r: Root) -> Root:
        return Root(mat_vec(self.matrix, r.coords))

    def act_coroot(self, v):
        return mat_vec(self.comatrix, v)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == identity_mat(self.rank)


@lru_cache(maxsize=None)
def _inverse_cached(w: FiniteWeylElement) -> FiniteWeylElement:
    # group elements recur constantly; caching avoids rational elimination
    return FiniteWeylElement(mat_inv_int(w.matrix), mat_inv_int(w.comatrix))


def identity_element(rs: RootSystem) -> FiniteWeylElement:
    eye = identity_mat(rs.rank)
    return FiniteWeylElement(eye, eye)


def _comatrix(rs: RootSystem, matrix: Mat) -> Mat:
    d = rs.symmetrizer
    n = rs.rank
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            num = d[i] * matrix[i][j]
            if num % d[j] != 0:
                raise RootSystemError("coroot action is not integral")
            row.append(num // d[j])
        out.append(tuple(row))
    return tuple(out)


def _pairing_row(rs: RootSystem, alpha: Root):
    """Row vector j -> (alpha-coroot | alpha_j), i.e. the functional <., alpha-coroot>."""
    v = coroot(rs, alpha).coords
    return tuple(sum(v[i] * rs.cartan[i][j] for i in range(rs.rank))
                 for j in range(rs.rank))


@lru_cache(maxsize=None)
def reflection_element(rs: RootSystem, alpha: Root) -> FiniteWeylElement:
    """Matrix of s_alpha; identical for alpha and -alpha."""
    if not rs.is_root(alpha):
        raise RootSystemError(f"{alpha.coords} is not a root")
    va = _pairing_row(rs, alpha)
    n = rs.rank
    m = tuple(tuple((1 if i == j else 0) - alpha.coords[i] * va[j] for j in range(n))
              for i in range(n))
    return FiniteWeylElement(m, _comatrix(rs, m))


@lru_cache(maxsize=None)
def reflections(rs: RootSystem) -> tuple[tuple[Root, FiniteWeylElement], ...]:
    """All reflections of W, keyed by canonical positive root, in root order."""
    return tuple((r, reflection_element(rs, r)) for r in rs.positive_roots)


@lru_cache(maxsize=None)
def _reflection_roots(rs: RootSystem) -> dict:
    return {w: r for r, w in reflections(rs)}


def root_of_reflection(rs: RootSystem, w: FiniteWeylElement) -> Root | None:
    """The positive root of a reflection, or None if w is not a reflection."""
    return _reflection_roots(rs).get(w)


def absolute_length(w: FiniteWeylElement) -> int:
    """Reflection length, computed as the codimension of the fixed space."""
    n = w.rank
    eye = identity_mat(n)
    diff = [[w.matrix[i][j] - eye[i][j] for j in range(n)] for i in range(n)]
    if not any(any(row) for row in diff):
        return 0
    return rational_rank(diff)


def leq_T(u: FiniteWeylElement, v: FiniteWeylElement) -> bool:
    """Absolute order: l(u) + l(u^-1 v) = l(v)."""
    return absolute_length(u) + absolute_length(u.inverse() * v) == absolute_length(v)


def reduced_factorizations(rs: RootSystem, w: FiniteWeylElement):
    """All reduced reflection factorizations of w, in canonical DFS order."""
    out: list[tuple[FiniteWeylElement, ...]] = []
    refs = reflections(rs)

    def dfs(current: FiniteWeylElement, length: int, prefix):
        if length == 0:
            out.append(tuple(prefix))
            return
        for _, t in refs:
            rest = t * current
            if absolute_length(rest) == length - 1:
                prefix.append(t)
                dfs(rest, length - 1, prefix)
                prefix.pop()

    dfs(w, absolute_length(w), [])
    return out


def roots_of_tuple(rs: RootSystem, elements) -> tuple[Root, ...]:
    roots = []
    for t in elements:
        r = root_of_reflection(rs, t)
        if r is None:
            raise RootSystemError("tuple entry is not a reflection")
        roots.append(r)
    return tuple(roots)


def generates_w0(rs: RootSystem, roots) -> bool:
    """Whether the reflections of the given roots generate the full group.

    Decided by the lattice criterion: the roots span the root lattice and
    their coroots span the coroot lattice.
    """
    roots = list(roots)
    if not roots:
        raise RootSystemError("generates_w0 needs a non-empty root set")
    full = full_lattice(rs.rank)
    return (lattice_equal(root_span(rs, roots), full)
            and lattice_equal(coroot_span(rs, roots), full))


def _fixed_space_basis(rs: RootSystem, roots):
    """Rational basis of the subspace fixed by all s_beta (root coordinates)."""
    rows = [_pairing_row(rs, r) for r in roots]
    sol = solve_rational(rows, [0] * len(rows))
    assert sol is not None
    _, basis = sol
    return basis


def is_parabolic(rs: RootSystem, roots) -> bool:
    """Whether <s_beta> is a parabolic subgroup, via the fixed-space fixer.

    Computes the fixed space U of the subgroup and compares its root
    closure with the set of all roots vanishing on U.
    """
    roots = list(roots)
    if not roots:
        return True
    closure = smallest_subsystem(rs, roots)
    basis = _fixed_space_basis(rs, roots)
    fixer = set()
    for alpha in rs.roots:
        pair_row = _pairing_row(rs, alpha)
        if all(sum(p * u[j] for j, p in enumerate(pair_row)) == 0 for u in basis):
            fixer.add(alpha)
    return fixer == set(closure)


def is_quasi_coxeter_fin(rs: RootSystem, w: FiniteWeylElement) -> bool:
    """Some reduced factorization of w generates the whole group."""
    return any(generates_w0(rs, roots_of_tuple(rs, fac))
               for fac in reduced_factorizations(rs, w))


def is_parabolic_quasi_coxeter_fin(rs: RootSystem, w: FiniteWeylElement) -> bool:
    """Some reduced factorization of w generates a parabolic subgroup."""
    return any(is_parabolic(rs, roots_of_tuple(rs, fac))
               for fac in reduced_factorizations(rs, w))


def fac_set(rs: RootSystem, target: FiniteWeylElement, length: int):
    """All length-m reflection tuples with product `target` generating W.

    The Fac set of the transitivity pipeline; exhaustive over reflection
    sequences, so only sensible at small rank.
    """
    refs = reflections(rs)
    out = []

    def dfs(prefix, product):
        if len(prefix) == length:
            if product == target and generates_w0(rs, roots_of_tuple(rs, prefix)):
                out.append(tuple(prefix))
            return
        for _, t in refs:
            prefix.append(t)
            dfs(prefix, product * t)
            prefix.pop()

    dfs([], identity_element(rs))
    return out


@lru_cache(maxsize=None)
def all_elements(rs: RootSystem) -> tuple[FiniteWeylElement, ...]:
    """The whole finite group, by closure of the simple reflections."""
    gens = [reflection_element(rs, r) for r in rs.simple_roots]
    seen = {identity_element(rs)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: w.matrix))
