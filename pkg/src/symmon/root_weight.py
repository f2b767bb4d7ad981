"""Exact root-system, weight-lattice, and Weyl-group arithmetic.

Classical families A, B, C, D in epsilon-coordinates:

* type A_{l} lives in the ambient space R^{l+1}, simple roots e_i - e_{i+1};
  the extra dimension carries the determinant direction chi = (1/n)(e_1+...+e_n)
  used by the extended weights chi_i = e_i and chi~_i = chi_i - chi;
* types B_l, C_l, D_l live in R^l with the standard orthonormal coordinates.

All arithmetic is over Fraction; equality of weights is exact.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    DegenerateRootError,
    PreconditionError,
    ResourceLimitError,
    UnsupportedFamilyError,
)

ORBIT_GUARD = 10**6
RANK_GUARD = 6


@dataclass(frozen=True, order=True)
class Weight:
    """A vector of exact rationals in the ambient epsilon-coordinate space."""

    coords: tuple[Fraction, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(linalg.vec_add(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(linalg.vec_sub(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))

    def scale(self, c) -> "Weight":
        return Weight(linalg.vec_scale(c, self.coords))

    def __rmul__(self, c) -> "Weight":
        return self.scale(c)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_json(self) -> list[str]:
        return [linalg.frac_str(c) for c in self.coords]

    @staticmethod
    def from_json(items: list[str]) -> "Weight":
        return Weight(tuple(Fraction(s) for s in items))

    def __repr__(self) -> str:
        return "(" + ", ".join(linalg.frac_str(c) for c in self.coords) + ")"


def weight(entries) -> Weight:
    return Weight(linalg.vec(entries))


@dataclass(frozen=True)
class RootSystem:
    """Simple-root data for one classical family at a fixed rank."""

    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Weight, ...]
    cartan: tuple[tuple[int, ...], ...]

    def form(self, mu: Weight, nu: Weight) -> Fraction:
        """The W-invariant bilinear form (standard dot product in our coordinates)."""
        return linalg.dot(mu.coords, nu.coords)

    def pairing(self, mu: Weight, alpha: Weight) -> Fraction:
        """<mu, alpha> = 2(mu, alpha)/(alpha, alpha)."""
        nn = self.form(alpha, alpha)
        if nn == 0:
            raise DegenerateRootError("zero-norm root in pairing")
        return 2 * self.form(mu, alpha) / nn

    def is_dominant(self, mu: Weight) -> bool:
        """Dominant abstract weight: all simple pairings are nonnegative integers."""
        for alpha in self.simple_roots:
            p = self.pairing(mu, alpha)
            if p < 0 or p.denominator != 1:
                return False
        return True

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json())


def _simple_roots(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    if family == "A":
        n = rank + 1
        rows = []
        for i in range(rank):
            r = [0] * n
            r[i], r[i + 1] = 1, -1
            rows.append(tuple(r))
        return tuple(rows)
    rows = []
    for i in range(rank - 1):
        r = [0] * rank
        r[i], r[i + 1] = 1, -1
        rows.append(tuple(r))
    last = [0] * rank
    if family == "B":
        last[rank - 1] = 1
    elif family == "C":
        last[rank - 1] = 2
    elif family == "D":
        if rank < 2:
            raise PreconditionError("type D needs rank >= 2")
        last[rank - 2] = last[rank - 1] = 1
    else:
        raise UnsupportedFamilyError(f"unknown family {family!r}")
    rows.append(tuple(last))
    return tuple(rows)


def root_system(family: str, rank: int) -> RootSystem:
    """Build the root system; families A, B, C, D, rank at desk scale."""
    family = family.upper()
    if rank < 1:
        raise PreconditionError("rank must be positive")
    if rank > RANK_GUARD:
        raise ResourceLimitError(f"rank {rank} exceeds desk-scale guard {RANK_GUARD}")
    simples = tuple(weight(r) for r in _simple_roots(family, rank))
    ambient = simples[0].dim
    rs = RootSystem(family, rank, ambient, simples, cartan=())
    cartan = tuple(
        tuple(int(rs.pairing(ai, aj)) for aj in simples) for ai in simples
    )
    return RootSystem(family, rank, ambient, simples, cartan)


def rootsystem_from_json(data: dict) -> RootSystem:
    return root_system(data["family"], int(data["rank"]))


def reflect(rs: RootSystem, alpha: Weight, mu: Weight) -> Weight:
    """Reflection of mu in the hyperplane orthogonal to alpha."""
    nn = rs.form(alpha, alpha)
    if nn == 0:
        raise DegenerateRootError("cannot reflect at a zero-norm vector")
    c = 2 * rs.form(mu, alpha) / nn
    return mu - alpha.scale(c)


def _reflection_matrix(rs: RootSystem, alpha: Weight) -> linalg.Mat:
    nn = rs.form(alpha, alpha)
    if nn == 0:
        raise DegenerateRootError("cannot reflect at a zero-norm vector")
    n = rs.ambient_dim
    a = alpha.coords
    return tuple(
        tuple(
            (Fraction(1) if i == j else Fraction(0)) - 2 * a[i] * a[j] / nn
            for j in range(n)
        )
        for i in range(n)
    )


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a word in simple reflections plus its exact matrix."""

    word: tuple[int, ...]
    matrix: linalg.Mat

    def apply(self, mu: Weight) -> Weight:
        return Weight(linalg.mat_vec(self.matrix, mu.coords))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word, linalg.mat_mul(self.matrix, other.matrix))


def weyl_identity(rs: RootSystem) -> WeylElement:
    return WeylElement((), linalg.identity_mat(rs.ambient_dim))


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """The reflection at the i-th simple root (0-based index)."""
    if not 0 <= i < rs.rank:
        raise PreconditionError(f"simple root index {i} out of range")
    return WeylElement((i,), _reflection_matrix(rs, rs.simple_roots[i]))


def weyl_from_word(rs: RootSystem, word) -> WeylElement:
    w = weyl_identity(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w


@functools.lru_cache(maxsize=None)
def fundamental_weights(rs: RootSystem) -> tuple[Weight, ...]:
    """omega_1..omega_l with <omega_i, alpha_j> = delta_ij, inside the simple-root span."""
    cartan_q = linalg.mat([[Fraction(e) for e in row] for row in rs.cartan])
    cinv = linalg.mat_inv(cartan_q)
    out = []
    for i in range(rs.rank):
        w = Weight(linalg.zero_vec(rs.ambient_dim))
        for k in range(rs.rank):
            w = w + rs.simple_roots[k].scale(cinv[i][k])
        out.append(w)
    return tuple(out)


def from_fundamental(rs: RootSystem, coeffs) -> Weight:
    """The weight sum_i coeffs[i] * omega_i."""
    fw = fundamental_weights(rs)
    if len(coeffs) != rs.rank:
        raise PreconditionError("need one coefficient per fundamental weight")
    w = Weight(linalg.zero_vec(rs.ambient_dim))
    for c, om in zip(coeffs, fw):
        w = w + om.scale(c)
    return w


def dominant_representative(rs: RootSystem, mu: Weight) -> tuple[Weight, WeylElement]:
    """The unique dominant weight in the W-orbit of mu, and a w with w(mu) dominant.

    Repeatedly reflects at any simple root pairing negatively; terminates by
    length descent.
    """
    current = mu
    word: list[int] = []
    while True:
        for i, alpha in enumerate(rs.simple_roots):
            if rs.form(current, alpha) < 0:
                current = reflect(rs, alpha, current)
                word.append(i)
                break
        else:
            break
    # the recorded word maps mu to the dominant element when applied right-to-left
    return current, weyl_from_word(rs, reversed(word))


def weyl_orbit(rs: RootSystem, mu: Weight, guard: int = ORBIT_GUARD) -> tuple[Weight, ...]:
    """BFS closure of mu under simple reflections, canonically sorted."""
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for w in frontier:
            for alpha in rs.simple_roots:
                img = reflect(rs, alpha, w)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if len(seen) > guard:
                        raise ResourceLimitError("Weyl orbit exceeds size guard")
        frontier = nxt
    return tuple(sorted(seen))


@functools.lru_cache(maxsize=None)
def all_roots(rs: RootSystem) -> tuple[Weight, ...]:
    """The full root set: union of Weyl orbits of the simple roots."""
    roots: set[Weight] = set()
    for alpha in rs.simple_roots:
        roots.update(weyl_orbit(rs, alpha))
    return tuple(sorted(roots))


@functools.lru_cache(maxsize=None)
def _coefficient_extractor(rs: RootSystem) -> tuple[linalg.Mat, tuple[linalg.Vec, ...]]:
    """Matrix mapping ambient coordinates to simple-root coefficients, plus
    normals of the simple-root span (for membership checks)."""
    basis = linalg.mat([a.coords for a in rs.simple_roots])
    gram = linalg.mat([[linalg.dot(a, b) for b in basis] for a in basis])
    extractor = linalg.mat_mul(linalg.mat_inv(gram), basis)
    return extractor, linalg.nullspace(basis)


def simple_root_coefficients(rs: RootSystem, mu: Weight) -> tuple[Fraction, ...] | None:
    """Coefficients of mu in the simple-root basis, or None if outside the span."""
    extractor, span_normals = _coefficient_extractor(rs)
    for nu in span_normals:
        if linalg.dot(nu, mu.coords) != 0:
            return None
    return linalg.mat_vec(extractor, mu.coords)


@functools.lru_cache(maxsize=None)
def positive_roots(rs: RootSystem) -> tuple[Weight, ...]:
    out = []
    for beta in all_roots(rs):
        coeffs = simple_root_coefficients(rs, beta)
        if coeffs is not None and all(c >= 0 for c in coeffs):
            out.append(beta)
    return tuple(out)


def dominance_leq(rs: RootSystem, mu: Weight, lam: Weight) -> bool:
    """True iff lam - mu is a nonnegative integer combination of simple roots."""
    coeffs = simple_root_coefficients(rs, lam - mu)
    if coeffs is None:
        return False
    return all(c >= 0 and c.denominator == 1 for c in coeffs)


def dominant_weights_below(rs: RootSystem, lam: Weight) -> tuple[Weight, ...]:
    """All dominant weights mu <= lam with mu in lam + root lattice.

    BFS downward by positive roots; any two comparable dominant weights are
    joined by a chain of dominant weights differing by single positive roots,
    so the closure is complete.
    """
    if not rs.is_dominant(lam):
        raise PreconditionError("dominant_weights_below requires a dominant weight")
    positives = positive_roots(rs)
    found = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for beta in positives:
                nu = mu - beta
                if nu not in found and rs.is_dominant(nu):
                    found.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return tuple(sorted(found))


def weight_set(rs: RootSystem, lam: Weight, guard: int = ORBIT_GUARD) -> tuple[Weight, ...]:
    """The saturated weight set Pi(lam) of the irreducible with highest weight lam:
    all mu in lam + root lattice whose dominant representative lies below lam.

    Computed as the union of the Weyl orbits of the dominant weights below lam.
    """
    out: set[Weight] = set()
    for mu in dominant_weights_below(rs, lam):
        out.update(weyl_orbit(rs, mu, guard))
        if len(out) > guard:
            raise ResourceLimitError("weight set exceeds size guard")
    return tuple(sorted(out))


def chi(rs: RootSystem) -> Weight:
    """The determinant direction (1/n)(e_1 + ... + e_n); type A only."""
    if rs.family != "A":
        raise UnsupportedFamilyError("chi is defined for type A only")
    n = rs.ambient_dim
    return Weight(tuple(Fraction(1, n) for _ in range(n)))


def extended_weights(rs: RootSystem, lam: Weight) -> tuple[Weight, ...]:
    """{chi + mu : mu in Pi(lam)} in ambient epsilon-coordinates (type A)."""
    c = chi(rs)
    return tuple(sorted(c + mu for mu in weight_set(rs, lam)))
