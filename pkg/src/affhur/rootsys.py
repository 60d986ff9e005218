"""Crystallographic root systems from Cartan data, with exact arithmetic.

Roots live in simple-root coordinates, coroots in simple-coroot
coordinates; both are integral. The bilinear form is normalized so that
short roots have squared length 2, which makes the symmetrizer entries
d_i = (alpha_i | alpha_i)/2 lie in {1, 2, 3}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import Mat, Vec, mat_vec

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Root:
    """A root in simple-root coordinates."""

    coords: Vec

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    @property
    def is_positive(self) -> bool:
        for c in self.coords:
            if c:
                return c > 0
        return False

    def positive(self) -> "Root":
        """Canonical positive representative of {root, -root}."""
        return self if self.is_positive else -self


@dataclass(frozen=True)
class CorootVector:
    """A coroot-lattice vector in simple-coroot coordinates."""

    coords: Vec


def _dynkin_data(family: str, rank: int):
    """Edges of the Dynkin diagram and the symmetrizer d."""
    n = rank
    path = [(i, i + 1) for i in range(n - 1)]
    if family == "A" and n >= 1:
        return path, (1,) * n
    if family == "B" and n >= 2:
        return path, (2,) * (n - 1) + (1,)
    if family == "C" and n >= 2:
        return path, (1,) * (n - 1) + (2,)
    if family == "D" and n >= 4:
        edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
        return edges, (1,) * n
    if family == "E" and n in (6, 7, 8):
        # Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-...
        chain = [1, 3] + list(range(4, n + 1))
        edges = [(a - 1, b - 1) for a, b in zip(chain, chain[1:])] + [(1, 3)]
        return edges, (1,) * n
    if family == "F" and n == 4:
        return path, (2, 2, 1, 1)
    if family == "G" and n == 2:
        return path, (1, 3)
    raise RootSystemError(f"invalid finite type {family}{rank}")


def _cartan_matrix(edges, d) -> Mat:
    n = len(d)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i, j in edges:
        # (alpha_i | alpha_j) = -max(d_i, d_j) for a Dynkin edge
        a[i][j] = -max(d[i], d[j]) // d[i]
        a[j][i] = -max(d[i], d[j]) // d[j]
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: Mat                 # cartan[i][j] = <alpha_j, alpha_i-coroot>
    symmetrizer: Vec            # d_i = (alpha_i | alpha_i)/2
    roots: tuple[Root, ...]     # all roots, sorted lexicographically
    highest_root: Root
    ratio_delta: int            # squared-length ratio long/short

    @property
    def root_set(self) -> frozenset[Root]:
        return _root_set(self)

    @property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.is_positive)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.rank
        return tuple(Root(tuple(1 if j == i else 0 for j in range(n))) for i in range(n))

    def bilinear(self, a: Root, b: Root) -> int:
        """(a | b), exact."""
        total = 0
        for i, ci in enumerate(a.coords):
            if ci:
                row = self.cartan[i]
                di = self.symmetrizer[i]
                total += ci * di * sum(row[j] * b.coords[j] for j in range(self.rank))
        return total

    def norm_sq(self, a: Root) -> int:
        return self.bilinear(a, a)

    def is_long(self, a: Root) -> bool:
        return self.norm_sq(a) == 2 * self.ratio_delta

    def is_short(self, a: Root) -> bool:
        return self.norm_sq(a) == 2

    def is_root(self, a: Root) -> bool:
        return a in self.root_set


@lru_cache(maxsize=None)
def _root_set(rs: RootSystem) -> frozenset[Root]:
    return frozenset(rs.roots)


def _simple_reflect(cartan: Mat, i: int, coords: Vec) -> Vec:
    pairing = sum(cartan[i][j] * coords[j] for j in range(len(coords)))
    return tuple(c - pairing if j == i else c for j, c in enumerate(coords))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the full root system of a finite type by reflection closure."""
    family = family.upper()
    edges, d = _dynkin_data(family, rank)
    cartan = _cartan_matrix(edges, d)
    n = rank
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen: set[Vec] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(n):
                w = _simple_reflect(cartan, i, v)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    seen |= {tuple(-c for c in v) for v in seen}
    roots = tuple(sorted(Root(v) for v in seen))
    delta = max(d)

    rs = RootSystem(
        family=family,
        rank=rank,
        cartan=cartan,
        symmetrizer=tuple(d),
        roots=roots,
        highest_root=roots[0],  # placeholder, fixed below
        ratio_delta=delta,
    )
    highest = [r for r in roots if r.is_positive
               and all(Root(tuple(x + y for x, y in zip(r.coords, s)))
                       not in rs.root_set for s in simple)]
    if len(highest) != 1:
        raise RootSystemError(f"highest root not unique in {family}{rank}")
    object.__setattr__(rs, "highest_root", highest[0])
    return rs


@lru_cache(maxsize=None)
def coroot(rs: RootSystem, alpha: Root) -> CorootVector:
    """Coroot 2*alpha/(alpha|alpha) in simple-coroot coordinates."""
    if not rs.is_root(alpha):
        raise RootSystemError(f"{alpha.coords} is not a root of {rs.family}{rs.rank}")
    d_alpha = rs.norm_sq(alpha) // 2
    out = []
    for c, di in zip(alpha.coords, rs.symmetrizer):
        num = c * di
        if num % d_alpha != 0:
            raise RootSystemError("non-integral coroot coordinates")
        out.append(num // d_alpha)
    return CorootVector(tuple(out))


def pairing(rs: RootSystem, lam: CorootVector, alpha: Root) -> int:
    """(lambda | alpha) for a coroot-lattice vector and a root."""
    if len(lam.coords) != rs.rank or len(alpha.coords) != rs.rank:
        raise RootSystemError("rank mismatch in pairing")
    return sum(v * x for v, x in zip(lam.coords, mat_vec(rs.cartan, alpha.coords)))


def pairing_coords(rs: RootSystem, lam_coords, alpha: Root):
    """Pairing for a coweight given by (possibly rational) coroot coordinates."""
    return sum(v * x for v, x in zip(lam_coords, mat_vec(rs.cartan, alpha.coords)))


def reflect(rs: RootSystem, alpha: Root, beta: Root) -> Root:
    """s_alpha(beta) = beta - <beta, alpha-coroot> alpha."""
    if not rs.is_root(alpha) or not rs.is_root(beta):
        raise RootSystemError("reflect arguments must be roots")
    p = pairing(rs, coroot(rs, alpha), beta)
    result = Root(tuple(b - p * a for a, b in zip(alpha.coords, beta.coords)))
    return result


def parse_type(s: str) -> RootSystem:
    """Parse a type string like 'A2' or 'b3' (case-insensitive)."""
    s = s.strip()
    if len(s) < 2 or s[0].upper() not in FAMILIES:
        raise RootSystemError(f"cannot parse root system type {s!r}")
    try:
        rank = int(s[1:])
    except ValueError:
        raise RootSystemError(f"cannot parse root system type {s!r}") from None
    return build_root_system(s[0].upper(), rank)


def parse_root(rs: RootSystem, s: str) -> Root:
    """Parse a root literal 'c1,c2,...,cn'."""
    try:
        coords = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise RootSystemError(f"cannot parse root literal {s!r}") from None
    if len(coords) != rs.rank:
        raise RootSystemError(f"root literal {s!r} has wrong rank for {rs.family}{rs.rank}")
    r = Root(coords)
    if not rs.is_root(r):
        raise RootSystemError(f"{s!r} is not a root of {rs.family}{rs.rank}")
    return r


def format_root(r: Root) -> str:
    return ",".join(str(c) for c in r.coords)
