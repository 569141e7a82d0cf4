"""Abstract simplicial complexes with exact integer chain algebra.

Vertices are arbitrary hashable, mutually orderable ids (strings, ints,
tuples).  Simplices are stored with their vertex list sorted; a user-facing
oriented simplex is any ordering of the vertices and is folded onto the
canonical order with the sign of the permutation.  Chains and cochains are
finitely supported integer maps keyed by canonical simplices, so all the
algebra below is exact.

The barycentric subdivision of a complex has one vertex per simplex; we use
the sorted vertex tuple itself as the id of that vertex, so a simplex of the
subdivision is a strictly increasing chain of faces, readable directly from
its ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .snf import smith_normal_form, solve_integer_system


class DegreeError(ValueError):
    """Chain/cochain degree does not match the operation's contract."""


@dataclass(frozen=True, order=True)
class Simplex:
    """A finite set of vertices, stored strictly increasing."""

    vertices: tuple

    def __init__(self, vertices):
        vs = tuple(sorted(vertices))
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise ValueError(f"repeated vertex {a!r}")
        object.__setattr__(self, "vertices", vs)

    @property
    def dim(self):
        return len(self.vertices) - 1

    def __contains__(self, v):
        return v in self.vertices

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def faces(self):
        """The codimension-1 faces, in vertex-removal order."""
        vs = self.vertices
        return [Simplex(vs[:i] + vs[i + 1:]) for i in range(len(vs))]

    def is_face_of(self, other):
        return set(self.vertices) <= set(other.vertices)

    def without(self, v):
        return Simplex(tuple(x for x in self.vertices if x != v))

    def joined(self, v):
        return Simplex(self.vertices + (v,))

    def __repr__(self):
        return f"Simplex{self.vertices!r}"


def permutation_sign(seq):
    """Sign of the permutation sorting ``seq``; 0 if entries repeat."""
    n = len(seq)
    seen = set(seq)
    if len(seen) != n:
        return 0
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if seq[i] > seq[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


def oriented(vertices):
    """Canonicalize an ordered vertex list to ``(Simplex, sign)``."""
    sign = permutation_sign(list(vertices))
    if sign == 0:
        raise ValueError(f"degenerate oriented simplex {tuple(vertices)!r}")
    return Simplex(vertices), sign


class Chain:
    """Finitely supported integer combination of n-simplices."""

    def __init__(self, degree, terms=None):
        self.degree = int(degree)
        self.terms = {}
        if terms:
            for s, c in dict(terms).items():
                if not isinstance(s, Simplex):
                    s = Simplex(s)
                if s.dim != self.degree:
                    raise DegreeError(f"{s} has dimension {s.dim}, chain degree {self.degree}")
                if c:
                    self.terms[s] = self.terms.get(s, 0) + int(c)
            self.terms = {s: c for s, c in self.terms.items() if c}

    @classmethod
    def from_oriented(cls, degree, oriented_terms):
        """Build from ``(vertex-tuple, coeff)`` pairs in arbitrary vertex order."""
        out = cls(degree)
        for verts, c in oriented_terms:
            s, sign = oriented(verts)
            out = out + cls(degree, {s: sign * c})
        return out

    def coefficient(self, simplex):
        if not isinstance(simplex, Simplex):
            simplex = Simplex(simplex)
        return self.terms.get(simplex, 0)

    def is_zero(self):
        return not self.terms

    def support(self):
        return set(self.terms)

    def __add__(self, other):
        if self.degree != other.degree:
            raise DegreeError("adding chains of different degree")
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.degree, out)

    def __neg__(self):
        return Chain(self.degree, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return Chain(self.degree, {s: int(k) * c for s, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Chain) and self.degree == other.degree and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"Chain({self.degree}, 0)"
        bits = " + ".join(f"{c}*{s.vertices}" for s, c in sorted(self.terms.items()))
        return f"Chain({self.degree}, {bits})"

    def boundary(self):
        """Alternating-sign sum of codimension-1 faces, extended linearly."""
        if self.degree == 0:
            return Chain(-1)
        out = {}
        for s, c in self.terms.items():
            for i, f in enumerate(s.faces()):
                sign = -1 if i % 2 else 1
                out[f] = out.get(f, 0) + sign * c
        return Chain(self.degree - 1, out)


def boundary(chain):
    return chain.boundary()


class Cochain:
    """Integer-valued function on n-simplices, finitely supported."""

    def __init__(self, degree, values=None):
        self.degree = int(degree)
        self.values = {}
        if values:
            for s, c in dict(values).items():
                if not isinstance(s, Simplex):
                    s = Simplex(s)
                if s.dim != self.degree:
                    raise DegreeError(f"{s} has dimension {s.dim}, cochain degree {self.degree}")
                if c:
                    self.values[s] = int(c)

    def __call__(self, simplex):
        if not isinstance(simplex, Simplex):
            simplex = Simplex(simplex)
        return self.values.get(simplex, 0)

    def __add__(self, other):
        if self.degree != other.degree:
            raise DegreeError("adding cochains of different degree")
        out = dict(self.values)
        for s, c in other.values.items():
            out[s] = out.get(s, 0) + c
        return Cochain(self.degree, out)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.values == other.values
        )


def evaluate(cochain, chain):
    """The pairing <cochain, chain>; degrees must match."""
    if cochain.degree != chain.degree:
        raise DegreeError(f"pairing degree {cochain.degree} cochain with degree {chain.degree} chain")
    return sum(c * cochain.values.get(s, 0) for s, c in chain.terms.items())


def coboundary(complex_, cochain):
    """The adjoint of the boundary within a complex.

    Characterized by <coboundary(c), z> == <c, boundary(z)> for every chain
    z supported in the complex.
    """
    out = {}
    for s in complex_.simplices(cochain.degree + 1):
        val = 0
        for i, f in enumerate(s.faces()):
            val += (-1 if i % 2 else 1) * cochain.values.get(f, 0)
        if val:
            out[s] = val
    return Cochain(cochain.degree + 1, out)


class SimplicialComplex:
    """A downward-closed set of simplices, indexed by dimension."""

    def __init__(self, simplices=()):
        self._by_dim = {}
        for s in simplices:
            self._add_with_faces(s if isinstance(s, Simplex) else Simplex(s))

    def _add_with_faces(self, s):
        stack = [s]
        while stack:
            cur = stack.pop()
            level = self._by_dim.setdefault(cur.dim, set())
            if cur in level:
                continue
            level.add(cur)
            if cur.dim > 0:
                stack.extend(cur.faces())

    @property
    def dim(self):
        return max(self._by_dim) if self._by_dim else -1

    def simplices(self, n=None):
        if n is None:
            return sorted(s for level in self._by_dim.values() for s in level)
        return sorted(self._by_dim.get(n, ()))

    def vertices(self):
        return [s.vertices[0] for s in self.simplices(0)]

    def __contains__(self, s):
        if not isinstance(s, Simplex):
            s = Simplex(s)
        return s in self._by_dim.get(s.dim, ())

    def __len__(self):
        return sum(len(level) for level in self._by_dim.values())

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._by_dim == other._by_dim

    def euler_characteristic(self):
        return sum((-1) ** n * len(level) for n, level in self._by_dim.items())

    def contains_chain(self, chain):
        return all(s in self for s in chain.terms)

    def boundary_matrix(self, n):
        """Matrix of the degree-n boundary map in the sorted simplex bases.

        Rows are indexed by (n-1)-simplices, columns by n-simplices.
        """
        rows = self.simplices(n - 1)
        cols = self.simplices(n)
        index = {s: i for i, s in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, s in enumerate(cols):
            for i, f in enumerate(s.faces()):
                mat[index[f]][j] = -1 if i % 2 else 1
        return mat

    def homology(self, n):
        """Integral homology in degree n as ``(betti, torsion divisors)``.

        Computed from the Smith normal forms of the two boundary matrices.
        Betti/torsion are relative to this finite complex only.
        """
        if n < 0:
            raise ValueError("negative degree")
        cn = len(self._by_dim.get(n, ()))
        if cn == 0:
            return 0, []
        if n == 0:
            rank_n = 0
        else:
            mat = self.boundary_matrix(n)
            rank_n = smith_normal_form(mat).rank if mat and mat[0] else 0
        up = self.boundary_matrix(n + 1)
        if up and up[0]:
            res = smith_normal_form(up)
            rank_up = res.rank
            torsion = [d for d in res.divisors if d > 1]
        else:
            rank_up = 0
            torsion = []
        return cn - rank_n - rank_up, torsion

    def reduced_betti(self, n):
        betti, _ = self.homology(n)
        if n == 0 and self._by_dim.get(0):
            return betti - 1
        return betti


def flag_complex(vertex_ids, disjoint_pairs, max_dim):
    """The clique complex of a symmetric irreflexive relation, truncated.

    Simplices are exactly the cliques of the relation with at most
    ``max_dim + 1`` vertices.  The truncation is mandatory: ambient
    complexes are unbounded in principle.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    vertex_ids = sorted(set(vertex_ids))
    adj = {v: set() for v in vertex_ids}
    for a, b in disjoint_pairs:
        if a == b:
            raise ValueError(f"relation pairs {a!r} with itself")
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    simplices = [Simplex((v,)) for v in vertex_ids]
    frontier = [(v,) for v in vertex_ids]
    for _ in range(max_dim):
        nxt = []
        for clique in frontier:
            last = clique[-1]
            common = set.intersection(*(adj[v] for v in clique)) if clique else set()
            for v in sorted(common):
                if v > last:
                    ext = clique + (v,)
                    simplices.append(Simplex(ext))
                    nxt.append(ext)
        if not nxt:
            break
        frontier = nxt
    return SimplicialComplex(simplices)


def full_subcomplex(complex_, vertex_subset):
    """Simplices of ``complex_`` all of whose vertices lie in the subset."""
    keep = set(vertex_subset)
    unknown = keep - set(complex_.vertices())
    if unknown:
        raise ValueError(f"vertices not in complex: {sorted(map(repr, unknown))}")
    return SimplicialComplex(
        s for s in complex_.simplices() if set(s.vertices) <= keep
    )


def simplex_complex(vertices):
    """The full simplex on the given vertices, as a complex."""
    return SimplicialComplex([Simplex(vertices)])


# -- barycentric subdivision ------------------------------------------------
#
# Subdivision vertices are the sorted vertex tuples of the original
# simplices; a subdivision simplex is a set of tuples totally ordered by
# strict inclusion.

def barycentric_subdivision(complex_):
    faces_of = {}
    for s in complex_.simplices():
        faces_of[s.vertices] = [
            t.vertices for t in complex_.simplices() if t.dim < s.dim and t.is_face_of(s)
        ]
    chains = []

    def extend(chain, top):
        chains.append(tuple(chain))
        for f in faces_of[top]:
            if set(f) < set(chain[0]):
                extend([f] + chain, f)

    for s in complex_.simplices():
        extend([s.vertices], s.vertices)
    return SimplicialComplex(Simplex(c) for c in chains)


def chain_simin(bd_simplex):
    """Smallest face in a subdivision simplex (an inclusion chain)."""
    return min(bd_simplex.vertices, key=len)


def chain_simax(bd_simplex):
    """Largest face in a subdivision simplex (an inclusion chain)."""
    return max(bd_simplex.vertices, key=len)


def is_inclusion_chain(tuples):
    seq = sorted(tuples, key=len)
    for a, b in zip(seq, seq[1:]):
        if not set(a) < set(b):
            return False
    return True


# -- filling algorithms -----------------------------------------------------

class FillError(ValueError):
    """A filling precondition failed (not a cycle, or not joinable)."""


def cone_fill(complex_, cycle, apex):
    """A chain w with boundary exactly ``cycle``, coned off at ``apex``.

    Requires the apex to be joinable to every simplex in the support (the
    joined simplex must belong to the complex) and the input to be a cycle.
    In degree 0 the coefficients must additionally sum to zero, since only
    reduced 0-cycles bound.
    """
    n = cycle.degree
    if n < 0:
        raise FillError("cannot fill in negative degree")
    if not cycle.boundary().is_zero():
        raise FillError("input chain is not a cycle")
    if n == 0 and sum(cycle.terms.values()) != 0:
        raise FillError("0-chain coefficients must sum to zero to bound")
    out = Chain(n + 1)
    for s, c in cycle.terms.items():
        if apex in s:
            raise FillError(f"apex {apex!r} already lies in {s}")
        joined = s.joined(apex)
        if joined not in complex_:
            raise FillError(f"apex {apex!r} is not joinable to {s}")
        # <apex, v_0, ..., v_n> folded onto the canonical vertex order
        _, sign = oriented((apex,) + s.vertices)
        out = out + Chain(n + 1, {joined: sign * c})
    return out


def prism_fill(complex_, cycle, vertex, copy_vertex):
    """Replace ``vertex`` by ``copy_vertex`` in a cycle, with explicit filling.

    Returns ``(replaced_cycle, w)`` where the boundary of w equals
    ``cycle - replaced_cycle`` exactly.  The copy must be joinable to every
    support simplex containing ``vertex`` and absent from the support.
    """
    n = cycle.degree
    if not cycle.boundary().is_zero():
        raise FillError("input chain is not a cycle")
    replaced = Chain(n)
    w = Chain(n + 1)
    for s, c in cycle.terms.items():
        if copy_vertex in s:
            raise FillError(f"copy vertex {copy_vertex!r} already lies in {s}")
        if vertex not in s:
            replaced = replaced + Chain(n, {s: c})
            continue
        target = s.without(vertex).joined(copy_vertex)
        if target not in complex_:
            raise FillError(f"copy vertex {copy_vertex!r} is not joinable to {s}")
        prism = s.joined(copy_vertex)
        if prism not in complex_:
            raise FillError(f"copy vertex {copy_vertex!r} is not joinable to {s}")
        rest = s.without(vertex).vertices
        # orientation with the replaced vertex pulled to the front
        _, front_sign = oriented((vertex,) + rest)
        _, target_sign = oriented((copy_vertex,) + rest)
        replaced = replaced + Chain(n, {target: front_sign * target_sign * c})
        _, prism_sign = oriented((copy_vertex, vertex) + rest)
        w = w + Chain(n + 1, {prism: front_sign * prism_sign * c})
    return replaced, w


def solve_boundary(candidates, target):
    """Integer coefficients on ``candidates`` whose boundary is ``target``.

    ``candidates`` is a list of simplices one degree above the target chain.
    Returns a Chain or None when no integer solution exists.
    """
    candidates = [s if isinstance(s, Simplex) else Simplex(s) for s in candidates]
    if not candidates:
        return Chain(target.degree + 1) if target.is_zero() else None
    degree = candidates[0].dim
    if any(s.dim != degree for s in candidates):
        raise DegreeError("candidate simplices of mixed dimension")
    if degree != target.degree + 1:
        raise DegreeError("candidates must sit one degree above the target")
    rows = sorted({f for s in candidates for f in s.faces()} | target.support())
    index = {s: i for i, s in enumerate(rows)}
    mat = [[0] * len(candidates) for _ in rows]
    for j, s in enumerate(candidates):
        for i, f in enumerate(s.faces()):
            mat[index[f]][j] += -1 if i % 2 else 1
    rhs = [target.terms.get(s, 0) for s in rows]
    sol = solve_integer_system(mat, rhs)
    if sol is None:
        return None
    return Chain(degree, {s: c for s, c in zip(candidates, sol) if c})


# -- JSON forms ---------------------------------------------------------------

def _vertex_to_json(v):
    if isinstance(v, tuple):
        return [_vertex_to_json(x) for x in v]
    return v


def _vertex_from_json(v):
    if isinstance(v, list):
        return tuple(_vertex_from_json(x) for x in v)
    return v


def complex_to_json(complex_):
    return {"simplices": [[_vertex_to_json(v) for v in s.vertices] for s in complex_.simplices()]}


def complex_from_json(doc):
    return SimplicialComplex(
        Simplex(tuple(_vertex_from_json(v) for v in verts)) for verts in doc["simplices"]
    )


def chain_to_json(chain):
    return {
        "deg": chain.degree,
        "terms": [
            {"simplex": [_vertex_to_json(v) for v in s.vertices], "coeff": c}
            for s, c in sorted(chain.terms.items())
        ],
    }


def chain_from_json(doc):
    return Chain(
        doc["deg"],
        {
            Simplex(tuple(_vertex_from_json(v) for v in t["simplex"])): int(t["coeff"])
            for t in doc["terms"]
        },
    )


def dumps(doc):
    """Canonical JSON text: sorted keys, no whitespace jitter."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
