"""Geometry of the metric-stretching parameter space.

A simplex sigma of the ambient complex indexes a family of metrics obtained
by stretching tubular neighborhoods of its member surfaces.  This module
makes the combinatorial skeleton of that family computable:

* smooth cut-off ramps with a fixed convention, so all derived lengths are
  reproducible numbers;
* weight functions a(.) on faces, the scale parameter lambda as a weighted
  sum over nested chains, and its exact minimum over a simplex;
* warped cylinder lengths, in closed form and by quadrature;
* symbolic metric descriptors listing the stretched cylinder segments;
* the piecewise homeomorphism between the stretch-domain boundary and the
  exterior half of a cube, with its inverse and a coverage checker for the
  cube decomposition;
* the quantitative vanishing predicate: with curvature data for the
  unstretched family, points stretched beyond a computable threshold
  certify that the solution-existence estimate fails, with an exact margin.

Faces of sigma are represented as sorted tuples of vertex ids, chains of
faces as tuples sorted by length, and chains of chains likewise.  Rational
inputs stay rational throughout; only the cut-off itself is floating point.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from scipy.integrate import quad


class DomainError(ValueError):
    """A point lies outside the operation's stated domain."""


WARP_CLAIMED = "claimed"
WARP_PRINTED = "printed"
WARPS = (WARP_CLAIMED, WARP_PRINTED)


# -- cut-off convention -------------------------------------------------------

def _bump(t):
    return math.exp(-1.0 / t) if t > 0 else 0.0


def rho0(t):
    """The reference ramp: 0 at 0, 1 at 1, with rho0(t) + rho0(1-t) = 1."""
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"rho0 needs t in [0, 1], got {t}")
    a = _bump(t)
    b = _bump(1.0 - t)
    return a / (a + b)


def cutoff(a, b, a1, b1, t):
    """The cut-off on ([a, b], [a1, b1]): 1 on the inner interval, ramping
    to 0 at the outer endpoints through affine reparametrizations of rho0.
    """
    a, b, a1, b1, t = map(float, (a, b, a1, b1, t))
    if not a < a1 < b1 < b:
        raise DomainError(f"need a < a' < b' < b, got {a} < {a1} < {b1} < {b}")
    if not a <= t <= b:
        raise DomainError(f"cutoff needs t in [{a}, {b}], got {t}")
    if t < a1:
        return rho0((t - a) / (a1 - a))
    if t <= b1:
        return 1.0
    return rho0((b - t) / (b - b1))


def stretch_profile(lam, t):
    """The ramp used on a stretched segment: supported on [2l, 5l], flat on
    [3l, 4l]."""
    return cutoff(2 * lam, 5 * lam, 3 * lam, 4 * lam, t)


# -- faces, chains, weights ---------------------------------------------------

def face(ids):
    vs = tuple(sorted(ids))
    if len(set(vs)) != len(vs):
        raise DomainError(f"repeated vertex in face {ids!r}")
    if not vs:
        raise DomainError("faces are nonempty")
    return vs


def is_subface(a, b):
    return set(a) <= set(b)


def face_chain(faces):
    """Normalize a strictly increasing chain of faces, shortest first."""
    seq = tuple(sorted((face(f) for f in faces), key=lambda f: (len(f), f)))
    for x, y in zip(seq, seq[1:]):
        if not (set(x) < set(y)):
            raise DomainError(f"not a strict chain of faces: {x} then {y}")
    if not seq:
        raise DomainError("chains are nonempty")
    return seq


def chain_min(s):
    return s[0]


def chain_max(s):
    return s[-1]


def nested_chain(chains):
    """A strictly increasing chain of sub-chains (a subdivision simplex of
    a subdivision simplex), shortest first."""
    seq = tuple(sorted((face_chain(c) for c in chains), key=lambda c: (len(c), c)))
    for x, y in zip(seq, seq[1:]):
        if not (set(x) < set(y)):
            raise DomainError(f"not a strict chain of chains: {x} then {y}")
    if not seq:
        raise DomainError("chains are nonempty")
    return seq


def all_faces(sigma):
    sigma = face(sigma)
    out = []
    n = len(sigma)
    for mask in range(1, 2 ** n):
        out.append(tuple(sigma[i] for i in range(n) if (mask >> i) & 1))
    return sorted(out, key=lambda f: (len(f), f))


def all_face_chains(sigma):
    """Every strictly increasing chain of faces of sigma (the subdivision's
    simplices).  Exponential; meant for desk-scale simplices only."""
    faces = all_faces(sigma)
    chains = []

    def extend(chain):
        chains.append(tuple(chain))
        top = chain[-1]
        for f in faces:
            if len(f) > len(top) and set(top) < set(f):
                chain.append(f)
                extend(chain)
                chain.pop()

    for f in faces:
        extend([f])
    return [tuple(c) for c in chains]


class WeightFunction:
    """A monotone scale assignment on faces: values in (0, 1], equal to 1 on
    vertices, non-increasing as faces grow."""

    def __init__(self, mapping=None, default=None):
        self._map = {face(k): Fraction(v) for k, v in (mapping or {}).items()}
        self._default = default

    @classmethod
    def dyadic(cls):
        """a(face) = 2^-dim, the stock choice: exact and strictly monotone."""
        return cls(default=lambda f: Fraction(1, 2 ** (len(f) - 1)))

    @classmethod
    def constant_on_higher(cls, value):
        """1 on vertices, a fixed value on every larger face."""
        value = Fraction(value)
        if not 0 < value <= 1:
            raise DomainError("weights lie in (0, 1]")
        return cls(default=lambda f: Fraction(1) if len(f) == 1 else value)

    @classmethod
    def one(cls):
        return cls(default=lambda f: Fraction(1))

    def value(self, f):
        f = face(f)
        if f in self._map:
            v = self._map[f]
        elif self._default is not None:
            v = Fraction(self._default(f))
        else:
            raise DomainError(f"no weight assigned to face {f}")
        if not 0 < v <= 1:
            raise DomainError(f"weight {v} for face {f} outside (0, 1]")
        if len(f) == 1 and v != 1:
            raise DomainError(f"vertex faces carry weight 1, got {v} on {f}")
        return v

    def check_monotone(self, sigma):
        """Verify the face condition on every pair of nested faces of sigma."""
        faces = all_faces(sigma)
        for small in faces:
            for big in faces:
                if set(small) < set(big) and self.value(big) > self.value(small):
                    raise DomainError(
                        f"weight increases along {small} < {big}: "
                        f"{self.value(small)} then {self.value(big)}"
                    )
        return True


def lambda_of(chains, weights, a):
    """The scale of a point: sum of t_j * a(largest face of s_j).

    ``chains`` is a nested chain (s_0 < ... < s_l of sub-chains), ``weights``
    the barycentric coordinates.  The result never exceeds a(smallest face
    of any s_j); that bound is re-checked here because everything downstream
    leans on it.
    """
    chains = nested_chain(chains)
    weights = [Fraction(w) if not isinstance(w, float) else w for w in weights]
    if len(weights) != len(chains):
        raise DomainError(f"{len(chains)} chain entries but {len(weights)} weights")
    if any(w < 0 for w in weights):
        raise DomainError("barycentric weights are non-negative")
    total = sum(weights)
    if isinstance(total, Fraction):
        if total != 1:
            raise DomainError(f"barycentric weights sum to {total}, want 1")
    elif abs(total - 1) > 1e-9:
        raise DomainError(f"barycentric weights sum to {total}, want 1")
    lam = sum(w * a.value(chain_max(s)) for w, s in zip(weights, chains))
    for s in chains:
        bound = a.value(chain_min(s))
        if lam > bound:
            raise DomainError(
                f"scale {lam} exceeds a({chain_min(s)}) = {bound}; weights not monotone?"
            )
    return lam


def lambda_min(sigma, a):
    """Exact minimum of the scale over the whole parameter family of sigma.

    The scale is affine in the barycentric weights, so the minimum over a
    subdivision simplex sits at a vertex, i.e. at some single chain; the
    candidate values are a(largest face) over all chains of faces.  For a
    monotone weight function this enumeration returns a(sigma) itself.
    """
    sigma = face(sigma)
    return min(a.value(chain_max(s)) for s in all_face_chains(sigma))


# -- warped cylinders ---------------------------------------------------------

def _as_number(x):
    if isinstance(x, bool):
        raise DomainError(f"expected a number, got {x!r}")
    return x if isinstance(x, (int, Fraction)) else float(x)


def inner_cylinder_length(lam, r, warp=WARP_CLAIMED):
    """Length of the fully stretched middle segment [3l, 4l]."""
    lam, r = _as_number(lam), _as_number(r)
    if warp == WARP_CLAIMED:
        return lam * (r + 1)
    if warp == WARP_PRINTED:
        return float(lam) * math.sqrt(float(r) + 1.0)
    raise DomainError(f"unknown warp convention {warp!r}")


def cylinder_length(lam, r, warp=WARP_CLAIMED):
    """Total length Lambda of the warped segment [2l, 5l].

    Under the claimed convention the speed is (r*profile + 1) and the ramps
    integrate to half their width by the symmetry of rho0, giving the exact
    closed form lam * (2r + 3).  The printed convention takes the speed to
    be sqrt(r*profile + 1) and has no closed form; it is evaluated by
    quadrature.  Either way the total strictly exceeds the inner length
    lam * (r + 1).
    """
    lam, r = _as_number(lam), _as_number(r)
    if lam <= 0:
        raise DomainError(f"scale must be positive, got {lam}")
    if r < 0:
        raise DomainError(f"stretch parameter must be non-negative, got {r}")
    if warp == WARP_CLAIMED:
        return lam * (2 * r + 3)
    if warp == WARP_PRINTED:
        return cylinder_length_quadrature(lam, r, warp)
    raise DomainError(f"unknown warp convention {warp!r}")


def cylinder_length_quadrature(lam, r, warp=WARP_CLAIMED):
    """Independent evaluation of Lambda by adaptive quadrature."""
    lam_f, r_f = float(lam), float(r)

    if warp == WARP_CLAIMED:
        def speed(t):
            return r_f * stretch_profile(lam_f, t) + 1.0
    elif warp == WARP_PRINTED:
        def speed(t):
            return math.sqrt(r_f * stretch_profile(lam_f, t) + 1.0)
    else:
        raise DomainError(f"unknown warp convention {warp!r}")
    val, _ = quad(
        speed, 2 * lam_f, 5 * lam_f,
        points=[3 * lam_f, 4 * lam_f], epsabs=1e-13, epsrel=1e-13, limit=200,
    )
    return val


# -- metric descriptors -------------------------------------------------------

@dataclass(frozen=True)
class CylinderSegment:
    surface: object
    lam: object
    r: object
    inner_length: object
    total_length: object
    region: tuple

    def to_json(self):
        return {
            "surface": str(self.surface),
            "lambda": float(self.lam),
            "r": float(self.r),
            "inner_length": float(self.inner_length),
            "total_length": float(self.total_length),
            "region": [str(self.region[0]), float(self.region[1]), float(self.region[2])],
        }


@dataclass(frozen=True)
class MetricDescriptor:
    """A convex combination of glued metrics, described symbolically.

    All terms share one scale and one stretch vector; on the cylinder
    region of each surface in the smallest face every term restricts to the
    same warped product metric, which is why the segment list below is
    well-defined for the combination.
    """

    sigma: tuple
    terms: tuple          # (weight, stretched face, lam, r dict)
    lam: object
    r: dict
    warp: str

    def cylinder_segments(self):
        segs = []
        for surface in sorted(self.r):
            rv = self.r[surface]
            segs.append(
                CylinderSegment(
                    surface=surface,
                    lam=self.lam,
                    r=rv,
                    inner_length=inner_cylinder_length(self.lam, rv, self.warp),
                    total_length=cylinder_length(self.lam, rv, self.warp),
                    region=(surface, 2 * self.lam, 5 * self.lam),
                )
            )
        return segs

    def regions_disjoint(self):
        """Segments live in neighborhoods of distinct surfaces, which stay
        disjoint at any scale within the weight bound."""
        surfaces = [seg.region[0] for seg in self.cylinder_segments()]
        return len(surfaces) == len(set(surfaces))


def metric_descriptor(sigma, s, chains, weights, r, a, warp=WARP_CLAIMED):
    """Descriptor of the metric at a parameter point.

    ``s`` is a chain of faces of sigma, ``chains``/``weights`` a point of
    the subdivision of s, ``r`` the stretch vector indexed by the smallest
    face of s.  Every term stretches a face containing that smallest face,
    with the shared scale, so the per-surface cylinder data is unambiguous.
    """
    sigma = face(sigma)
    s = face_chain(s)
    for f in s:
        if not is_subface(f, sigma):
            raise DomainError(f"{f} is not a face of {sigma}")
    chains = nested_chain(chains)
    for sub in chains:
        if not set(sub) <= set(s):
            raise DomainError(f"{sub} is not a sub-chain of {s}")
    tau = chain_min(s)
    if set(r) != set(tau):
        raise DomainError(f"stretch vector indexed by {sorted(r)}, want {tau}")
    for sid, rv in r.items():
        if _as_number(rv) < 0:
            raise DomainError(f"negative stretch {rv} on {sid}")
    lam = lambda_of(chains, weights, a)
    terms = []
    for w, sub in zip(weights, chains):
        stretched = chain_min(sub)
        if not set(tau) <= set(stretched):
            raise DomainError(f"term face {stretched} misses the stretch face {tau}")
        terms.append((w, stretched, lam, dict(r)))
    return MetricDescriptor(
        sigma=sigma, terms=tuple(terms), lam=lam, r=dict(r), warp=warp
    )


# -- the cube-side decomposition and the piecewise homeomorphism --------------

def boundary_corner(sigma, pinned, tau, big_r):
    """Corner of the cube assigned to a face: coordinates in tau go to R,
    the rest to 0; the pinned coordinate is omitted."""
    sigma = face(sigma)
    tau = face(tau)
    if pinned not in tau:
        raise DomainError(f"{pinned!r} is not a vertex of {tau}")
    if not is_subface(tau, sigma):
        raise DomainError(f"{tau} is not a face of {sigma}")
    return {v: (big_r if v in tau else 0 * big_r) for v in sigma if v != pinned}


def decompose_cube_point(sigma, pinned, big_r, x):
    """Locate a cube point in the face decomposition.

    Returns (tau, s): tau collects the coordinates within R/2 of R (plus the
    pinned vertex), and s is the saturated chain from tau to sigma obtained
    by repeatedly adjoining the largest remaining coordinate (ties broken
    toward the smallest vertex id, which keeps the choice deterministic;
    any tie choice lands in the same closed region).
    """
    sigma = face(sigma)
    if pinned not in sigma:
        raise DomainError(f"{pinned!r} is not a vertex of {sigma}")
    rest = [v for v in sigma if v != pinned]
    if set(x) != set(rest):
        raise DomainError(f"cube point indexed by {sorted(x)}, want {rest}")
    half = Fraction(big_r, 2) if isinstance(big_r, (int, Fraction)) else big_r / 2
    for v, xv in x.items():
        if not 0 <= _as_number(xv) <= _as_number(big_r):
            raise DomainError(f"coordinate {v}={xv} outside [0, {big_r}]")
    tau = face([pinned] + [v for v in rest if _as_number(x[v]) >= _as_number(half)])
    chain = [tau]
    current = set(tau)
    while len(current) < len(sigma):
        remaining = [v for v in sigma if v not in current]
        top = max(_as_number(x[v]) for v in remaining)
        best = min(v for v in remaining if _as_number(x[v]) == top)
        current.add(best)
        chain.append(face(current))
    return tau, tuple(chain)


def in_region(sigma, pinned, tau, s, big_r, x):
    """Membership of a cube point in the closed region of a piece (tau, s)."""
    sigma = face(sigma)
    tau = face(tau)
    s = face_chain(s)
    half = _as_number(big_r) / 2
    for v in tau:
        if v != pinned and not half <= _as_number(x[v]) <= _as_number(big_r):
            return False
    added = []
    for small, big in zip(s, s[1:]):
        (new,) = set(big) - set(small)
        added.append(new)
    values = [_as_number(x[v]) for v in added]
    if any(v > half for v in values):
        return False
    return all(a >= b for a, b in zip(values, values[1:]))


def _check_piece(sigma, pinned, s, big_r):
    sigma = face(sigma)
    s = face_chain(s)
    tau = chain_min(s)
    if pinned not in tau:
        raise DomainError(f"pinned vertex {pinned!r} not in the smallest face {tau}")
    if chain_max(s) != sigma:
        raise DomainError(f"chain must end at {sigma}, ends at {chain_max(s)}")
    if len(s) + len(tau) != len(sigma) + 1:
        raise DomainError(
            f"piece chain must be saturated: {len(s)} faces from {tau} to {sigma}"
        )
    for small, big in zip(s, s[1:]):
        if len(big) != len(small) + 1:
            raise DomainError(f"chain jumps from {small} to {big}")
    return sigma, s, tau


def psi_forward(sigma, pinned, big_r, s, t, r):
    """Map a boundary parameter point into the exterior cube face.

    The point consists of the saturated chain ``s`` (smallest face tau,
    largest sigma), barycentric weights ``t`` on its entries, and stretch
    values ``r`` on tau with r[pinned] == R.  Coordinates of vertices
    outside tau come from the weights (scaled into [0, R/2]); coordinates
    inside tau are the stretch values mapped affinely onto [R/2, R]; the
    pinned coordinate sits at R.  Exact on rational inputs.
    """
    sigma, s, tau = _check_piece(sigma, pinned, s, big_r)
    if len(t) != len(s):
        raise DomainError(f"{len(s)} chain entries but {len(t)} weights")
    if any(_as_number(w) < 0 for w in t):
        raise DomainError("barycentric weights are non-negative")
    total = sum(t)
    if abs(_as_number(total) - 1) > 1e-9:
        raise DomainError(f"barycentric weights sum to {total}, want 1")
    if set(r) != set(tau):
        raise DomainError(f"stretch vector indexed by {sorted(r)}, want {tau}")
    if r[pinned] != big_r:
        raise DomainError(f"pinned stretch r[{pinned!r}] = {r[pinned]}, want {big_r}")
    for v, rv in r.items():
        if not 0 <= _as_number(rv) <= _as_number(big_r):
            raise DomainError(f"stretch {v}={rv} outside [0, {big_r}]")
    two = 2 if isinstance(big_r, (int, Fraction)) else 2.0
    x = {}
    for v in sigma:
        if v == pinned:
            x[v] = big_r
        elif v in tau:
            x[v] = (r[v] + big_r) / two
        else:
            weight = sum(w for w, f in zip(t, s) if v in f)
            x[v] = big_r * weight / two
    return x


def psi_inverse_piece(sigma, pinned, big_r, s, x):
    """Invert the forward map on one piece; x omits the pinned coordinate."""
    sigma, s, tau = _check_piece(sigma, pinned, s, big_r)
    added = []
    for small, big in zip(s, s[1:]):
        (new,) = set(big) - set(small)
        added.append(new)
    k = len(added)
    two = 2 if isinstance(big_r, (int, Fraction)) else 2.0
    tails = [two * x[v] / big_r for v in added]  # t_{i+1} + ... + t_k
    t = [0] * (k + 1)
    if k:
        t[k] = tails[k - 1]
        for j in range(1, k):
            t[j] = tails[j - 1] - tails[j]
        t[0] = 1 - tails[0]
    else:
        t[0] = 1
    if any(_as_number(w) < -1e-12 for w in t):
        raise DomainError(f"point not in the region of this piece: weights {t}")
    r = {v: two * x[v] - big_r for v in tau if v != pinned}
    r[pinned] = big_r
    return t, r


def psi_inverse(sigma, big_r, x):
    """Global inverse on the exterior cube boundary.

    The pinned vertex is the smallest id whose coordinate equals R; the
    piece is recovered by the cube decomposition.  Returns
    (pinned, tau, s, t, r).  Points on piece overlaps go to the canonical
    piece; all pieces agree there.
    """
    sigma = face(sigma)
    if set(x) != set(sigma):
        raise DomainError(f"point indexed by {sorted(x)}, want {sigma}")
    pinned = None
    for v in sigma:
        if x[v] == big_r or abs(_as_number(x[v]) - _as_number(big_r)) < 1e-12:
            pinned = v
            break
    if pinned is None:
        raise DomainError("no coordinate equals R: point is not on the exterior boundary")
    rest = {v: xv for v, xv in x.items() if v != pinned}
    tau, s = decompose_cube_point(sigma, pinned, big_r, rest)
    t, r = psi_inverse_piece(sigma, pinned, big_r, s, rest)
    return pinned, tau, s, t, r


def enumerate_pieces(sigma, pinned):
    """All (tau, s) pieces for one pinned vertex: saturated chains from a
    face containing the pinned vertex up to sigma."""
    sigma = face(sigma)
    out = []
    for tau in all_faces(sigma):
        if pinned not in tau:
            continue
        added_pool = [v for v in sigma if v not in tau]

        def build(chain, remaining):
            if not remaining:
                out.append((tau, tuple(chain)))
                return
            for v in list(remaining):
                nxt = face(set(chain[-1]) | {v})
                build(chain + [nxt], [w for w in remaining if w != v])

        build([tau], added_pool)
    return out


def q_cover_check(sigma, big_r, step):
    """Exhaustive grid audit of the cube decomposition.

    Every grid point of [0, R]^(sigma minus pinned) must fall in the region
    of the piece the decomposition picks, for every choice of pinned vertex.
    ``step`` must divide R exactly.  Returns a report with zero uncovered
    points when the decomposition is correct.
    """
    sigma = face(sigma)
    big_r = Fraction(big_r)
    step = Fraction(step)
    if big_r <= 0 or step <= 0 or (big_r / step).denominator != 1:
        raise DomainError(f"step {step} must divide R = {big_r}")
    ticks = [step * i for i in range(int(big_r / step) + 1)]
    total = 0
    uncovered = []
    per_pinned = {}
    for pinned in sigma:
        rest = [v for v in sigma if v != pinned]
        count = 0
        for combo in iter_product(ticks, repeat=len(rest)):
            x = dict(zip(rest, combo))
            tau, s = decompose_cube_point(sigma, pinned, big_r, x)
            total += 1
            count += 1
            if not in_region(sigma, pinned, tau, s, big_r, x):
                uncovered.append((pinned, dict(x)))
        per_pinned[pinned] = count
    return {
        "sigma": list(sigma),
        "R": str(big_r),
        "step": str(step),
        "points": total,
        "uncovered": len(uncovered),
        "uncovered_points": [
            {"pinned": p, "x": {k: str(v) for k, v in pt.items()}} for p, pt in uncovered[:10]
        ],
        "per_pinned": {str(p): c for p, c in per_pinned.items()},
    }


# -- the vanishing predicate --------------------------------------------------

@dataclass(frozen=True)
class CurvatureModel:
    """Curvature input for the vanishing estimate.

    ``kappa_norm_sup`` models the largest squared L2 norm of the negative
    scalar curvature over the unstretched family, already divided by
    (4 pi)^2 so that rational toy models stay exact.  ``c1_square`` is the
    self-pairing of the characteristic class.
    """

    kappa_norm_sup: object
    c1_square: int

    def __post_init__(self):
        if _as_number(self.kappa_norm_sup) < 0:
            raise DomainError("curvature sup is non-negative")

    def c_value(self):
        return self.kappa_norm_sup - self.c1_square


def vanishing_data(sigma, a, model):
    """The derived thresholds for a simplex: scale minimum, curvature
    excess, and the stretch bounds (per face and maximized)."""
    sigma = face(sigma)
    lam = lambda_min(sigma, a)
    c = model.c_value()
    zero = 0 * c if isinstance(c, Fraction) else 0
    r_bar = max(c / lam, zero)
    per_face = {}
    for tau in all_faces(sigma):
        lam_tau = lambda_min(tau, a)
        per_face[tau] = max(c / lam_tau, zero)
    r_max = max(per_face.values())
    return {
        "lambda_min": lam,
        "c_value": c,
        "r_bar": r_bar,
        "r_max": r_max,
        "per_face_r_bar": per_face,
    }


def sample_ext_boundary(sigma, big_r, count, rng, denominator=64):
    """Seeded rational samples on the exterior boundary of the stretch
    domain: a chain of faces, a nested chain with weights, and a stretch
    vector on the smallest face with at least one entry pinned at R."""
    sigma = face(sigma)
    big_r = Fraction(big_r)
    samples = []
    for _ in range(count):
        perm = list(sigma)
        rng.shuffle(perm)
        sizes = sorted(rng.sample(range(1, len(sigma) + 1), rng.randint(1, len(sigma))))
        s = face_chain([perm[:c] for c in sizes])
        entries = list(s)
        rng.shuffle(entries)
        depth = rng.randint(1, len(entries))
        chains = nested_chain(
            [entries[:c] for c in sorted(rng.sample(range(1, len(entries) + 1), depth))]
        )
        raw = [rng.randint(0, denominator) for _ in chains]
        if sum(raw) == 0:
            raw[0] = 1
        total = sum(raw)
        weights = [Fraction(v, total) for v in raw]
        tau = chain_min(s)
        r = {v: big_r * Fraction(rng.randint(0, denominator), denominator) for v in tau}
        pin = rng.choice(sorted(tau))
        r[pin] = big_r
        samples.append((s, chains, weights, r))
    return samples


@dataclass(frozen=True)
class VanishingCertificate:
    certified: bool
    big_r: object
    c_value: object
    sample_count: int
    min_margin: object
    margins: tuple

    def to_json(self):
        return {
            "certified": self.certified,
            "R": float(self.big_r),
            "c_value": float(self.c_value),
            "samples": self.sample_count,
            "min_margin": float(self.min_margin),
        }


def vanishing_certificate(sigma, a, model, big_r, samples, vertex_data, warp=WARP_CLAIMED):
    """Certify the solution-vanishing estimate over sampled boundary points.

    Preconditions: R at least the derived threshold for sigma, and every
    vertex must satisfy chi^2 + 1 <= (c1 pairing)^2 (automatic for strict
    adjunction violators).  For each sample the stretched lengths of the
    smallest face's cylinders are summed; the certificate asserts that the
    total exceeds the curvature excess on every sample, which is exactly
    the failure of the existence estimate.  Margins are exact on rational
    input.
    """
    sigma = face(sigma)
    data = vanishing_data(sigma, a, model)
    if _as_number(big_r) < _as_number(data["r_bar"]):
        raise DomainError(
            f"R = {big_r} is below the derived threshold {data['r_bar']}; refusing"
        )
    for v in sigma:
        if v not in vertex_data:
            raise DomainError(f"no vertex data for {v!r}")
        chi, pairing = vertex_data[v]
        if chi * chi + 1 > pairing * pairing:
            raise DomainError(
                f"vertex {v!r} fails chi^2 + 1 <= (c1 pairing)^2: "
                f"{chi}^2 + 1 > {pairing}^2"
            )
    c = model.c_value()
    margins = []
    for s, chains, weights, r in samples:
        s = face_chain(s)
        if not is_subface(chain_max(s), sigma):
            raise DomainError(f"sample chain {s} is not over {sigma}")
        tau = chain_min(s)
        if set(r) != set(tau):
            raise DomainError(f"sample stretch indexed by {sorted(r)}, want {tau}")
        if not any(rv == big_r for rv in r.values()):
            raise DomainError("sample is not on the exterior boundary: no r equals R")
        lam = lambda_of(chains, weights, a)
        stretched_total = sum(cylinder_length(lam, rv, warp) for rv in r.values())
        margins.append(stretched_total - c)
    min_margin = min(margins) if margins else None
    certified = bool(margins) and all(_as_number(m) > 0 for m in margins)
    return VanishingCertificate(
        certified=certified,
        big_r=big_r,
        c_value=c,
        sample_count=len(margins),
        min_margin=min_margin,
        margins=tuple(margins),
    )


# -- self-test ----------------------------------------------------------------

def selftest(seed=0, warp=WARP_CLAIMED, max_dim=3, tolerance=None):
    """Run every property check at desk scale; returns a JSON-able report.

    ``tolerance`` overrides the round-trip and quadrature thresholds
    (defaults 1e-12 and 1e-9).
    """
    trip_tol = 1e-12 if tolerance is None else float(tolerance)
    quad_tol = 1e-9 if tolerance is None else float(tolerance)
    rng = random.Random(seed)
    checks = []

    dev = max(abs(rho0(t) + rho0(1 - t) - 1.0) for t in [i / 97 for i in range(98)])
    checks.append({"name": "ramp-symmetry", "ok": dev <= 1e-15, "max_deviation": dev})

    sigma = tuple("ABCD"[: max_dim + 1])
    a = WeightFunction.dyadic()
    lm = lambda_min(sigma, a)
    checks.append(
        {
            "name": "scale-minimum",
            "ok": lm == a.value(sigma),
            "value": str(lm),
            "expected": str(a.value(sigma)),
        }
    )

    worst = 0.0
    for _ in range(50):
        lam = Fraction(rng.randint(1, 8), 8)
        r = Fraction(rng.randint(0, 40), 4)
        closed = cylinder_length(lam, r, warp)
        numeric = cylinder_length_quadrature(lam, r, warp)
        worst = max(worst, abs(float(closed) - numeric))
        # the total always exceeds the (warp-dependent) inner length
        if not float(closed) > float(inner_cylinder_length(lam, r, warp)):
            worst = float("inf")
    checks.append({"name": "cylinder-length", "ok": worst <= quad_tol, "max_deviation": worst})

    big_r = Fraction(1)
    err = 0.0
    for _ in range(400):
        x = {v: Fraction(rng.randint(0, 64), 64) for v in sigma}
        pin = rng.choice(sigma)
        x[pin] = big_r
        pinned, tau, s, t, r = psi_inverse(sigma, big_r, x)
        back = psi_forward(sigma, pinned, big_r, s, t, r)
        err = max(err, max(abs(float(back[v]) - float(x[v])) for v in sigma))
    checks.append({"name": "psi-round-trip", "ok": err <= trip_tol, "max_error": err})

    cover = q_cover_check(sigma, 1, Fraction(1, 4))
    checks.append(
        {"name": "cube-cover", "ok": cover["uncovered"] == 0, "points": cover["points"]}
    )

    model = CurvatureModel(kappa_norm_sup=Fraction(10), c1_square=4)
    aa = WeightFunction.constant_on_higher(Fraction(1, 2))
    data = vanishing_data(sigma, aa, model)
    # the threshold formula assumes the claimed warp; under the printed
    # convention lengths grow like sqrt(r), so the safe radius is squared
    big_r = data["r_bar"]
    if warp == WARP_PRINTED:
        big_r = max(big_r, big_r * big_r - 1)
    samples = sample_ext_boundary(sigma, big_r, 100, rng)
    vertex_data = {v: (0, 2) for v in sigma}
    cert = vanishing_certificate(sigma, aa, model, big_r, samples, vertex_data, warp)
    checks.append(
        {
            "name": "vanishing-margin",
            "ok": cert.certified,
            "min_margin": float(cert.min_margin),
            "R": float(big_r),
        }
    )

    return {
        "seed": seed,
        "warp": warp,
        "max_dim": max_dim,
        "ok": all(c["ok"] for c in checks),
        "checks": checks,
    }
