"""Reduced simplicial homology of Stanley-Reisner complexes.

Supplies local cohomology lengths of square-free monomial fixture rings
independently of the Groebner engine. Only fixture-grade: the caller must
assert that the ring is Buchsbaum with below-dimension cohomology
concentrated in degree zero; nothing is inferred.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .binfit import CohomologyVector
from .linalg import rank_mod


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[str, ...]
    facets: tuple[frozenset, ...]  # vertex indices; inclusion-maximal, incomparable

    def faces(self) -> dict[int, list[tuple]]:
        """All faces grouped by dimension, each a sorted index tuple; includes ()."""
        seen = {(): None}
        for facet in self.facets:
            verts = sorted(facet)
            for k in range(1, len(verts) + 1):
                for c in combinations(verts, k):
                    seen[c] = None
        by_dim: dict[int, list[tuple]] = {}
        for f in seen:
            by_dim.setdefault(len(f) - 1, []).append(f)
        for faces in by_dim.values():
            faces.sort()
        return by_dim

    @property
    def dim(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)


def _maximal(sets: list[frozenset]) -> tuple[frozenset, ...]:
    out = []
    for s in sets:
        if not any(s < t for t in sets):
            if s not in out:
                out.append(s)
    return tuple(sorted(out, key=sorted))


def complex_from_facets(vertices, facet_lists) -> SimplicialComplex:
    vertices = tuple(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    sets = [frozenset(index[v] for v in facet) for facet in facet_lists]
    return SimplicialComplex(vertices, _maximal(sets))


def complex_from_squarefree(gens, vertices) -> SimplicialComplex:
    """Complex whose faces are the subsets killed by no generator support.

    Generators may be Poly monomials or exponent tuples; all must be
    square-free monomials.
    """
    vertices = tuple(vertices)
    n = len(vertices)
    supports = []
    for g in gens:
        exps = g if isinstance(g, tuple) else _monomial_exponents(g)
        if any(e not in (0, 1) for e in exps):
            raise ValueError(f"generator {g} is not square-free")
        supports.append(frozenset(i for i, e in enumerate(exps) if e))
    faces = []
    for k in range(n + 1):
        for c in combinations(range(n), k):
            cs = set(c)
            if not any(s <= cs for s in supports):
                faces.append(frozenset(c))
    return SimplicialComplex(vertices, _maximal(faces))


def _monomial_exponents(g) -> tuple:
    if len(g.terms) != 1:
        raise ValueError(f"generator {g} is not a monomial")
    return next(iter(g.terms))


def boundary_matrix(faces_low: list[tuple], faces_high: list[tuple], p: int) -> np.ndarray:
    """Boundary map from k-faces (columns) to (k-1)-faces (rows) over F_p."""
    index = {f: i for i, f in enumerate(faces_low)}
    mat = np.zeros((len(faces_low), len(faces_high)), dtype=np.int64)
    for j, f in enumerate(faces_high):
        for i in range(len(f)):
            sub = f[:i] + f[i + 1 :]
            mat[index[sub], j] = (-1) ** i % p
    return mat


def reduced_homology_dims(cx: SimplicialComplex, p: int = 32003) -> list[int]:
    """Reduced Betti numbers over F_p: [b_{-1}, b_0, ..., b_dim]."""
    by_dim = cx.faces()
    top = cx.dim
    ranks = {}
    for k in range(0, top + 1):
        ranks[k] = rank_mod(boundary_matrix(by_dim.get(k - 1, []), by_dim.get(k, []), p), p)
    out = []
    for k in range(-1, top + 1):
        dim_ck = len(by_dim.get(k, []))
        out.append(dim_ck - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return out


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Alternating sum of face counts, empty face included with sign -1."""
    by_dim = cx.faces()
    return sum((1 if k % 2 == 0 else -1) * len(faces) for k, faces in by_dim.items())


def buchsbaum_cohomology_vector(
    cx: SimplicialComplex, d: int, p: int = 32003, buchsbaum_asserted: bool = False
) -> CohomologyVector:
    """h^j for j < d, with h^j = b_{j-1} and h^0 = 0 (square-free quotients).

    Valid only when the fixture asserts the Buchsbaum property with
    degree-zero-concentrated cohomology below the dimension.
    """
    if not buchsbaum_asserted:
        raise ValueError("fixture must assert the Buchsbaum/degree-0 hypothesis")
    betti = reduced_homology_dims(cx, p)
    h = [0]
    for j in range(1, d):
        # b_{j-1} sits at offset j-1+1 in [b_{-1}, b_0, ...]
        h.append(betti[j] if j < len(betti) else 0)
    return CohomologyVector(tuple(h))
