"""Classical involutions on the character lattice of a maximal torus.

Each catalog entry ships an explicit integer matrix theta_star acting on the
ambient epsilon-coordinates, chosen relative to a maximally split torus so
that the catalog's spherical generators come out special.  The matrices are
gated by checkable invariants (involutive, permutes the roots, preserves the
form, positivity of the split system) rather than by the derivation.

Families and parameters (p <= q everywhere):

=========  ======================================  ============  =========
family     symmetric variety                       params        roots
=========  ======================================  ============  =========
AI         SL_n / SO_n                             n >= 2        A_{n-1}
AII        SL_{2n} / Sp_{2n}                       n >= 2        A_{2n-1}
AIII       SL_n / S(GL_p x GL_q), n = p+q          p, q          A_{n-1}
CI         Sp_{2n} / GL_n                          n >= 1        C_n
DIII       SO_{2n} / GL_n                          n >= 2        D_n
BDI        SO_n / S(O_p x O_q), n = p+q            p, q          B/D_{n//2}
CII        Sp_{2n} / (Sp_{2p} x Sp_{2q}), n = p+q  p, q          C_n
=========  ======================================  ============  =========
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg, root_weight
from .errors import NotSpecialError, PreconditionError, UnsupportedFamilyError
from .root_weight import RootSystem, Weight

FAMILIES = ("AI", "AII", "AIII", "CI", "DIII", "BDI", "CII")


@dataclass(frozen=True)
class InvolutionSpec:
    """A classical symmetric pair: theta* as an integer matrix on the ambient
    weight coordinates, plus an optional matrix-group realization tag."""

    family: str
    params: tuple[int, ...]
    theta_star: tuple[tuple[int, ...], ...]
    theta0: str | None = None  # "transpose" (AI) or "symplectic" (AII)

    @property
    def ambient_dim(self) -> int:
        return len(self.theta_star)

    def root_system(self) -> RootSystem:
        family, rank = _root_data(self.family, self.params)
        return root_weight.root_system(family, rank)

    def apply_star(self, w: Weight) -> Weight:
        if w.dim != self.ambient_dim:
            raise PreconditionError("ambient dimension mismatch")
        mat = tuple(tuple(Fraction(e) for e in row) for row in self.theta_star)
        return Weight(linalg.mat_vec(mat, w.coords))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "theta_star": [e for row in self.theta_star for e in row],
        }

    def to_json_str(self) -> str:
        return json.dumps(self.to_json())


def _root_data(family: str, params: tuple[int, ...]) -> tuple[str, int]:
    if family == "AI":
        (n,) = params
        return "A", n - 1
    if family == "AII":
        (n,) = params
        return "A", 2 * n - 1
    if family == "AIII":
        p, q = params
        return "A", p + q - 1
    if family == "CI":
        (n,) = params
        return "C", n
    if family == "DIII":
        (n,) = params
        return "D", n
    if family == "BDI":
        p, q = params
        n = p + q
        return ("B", n // 2) if n % 2 else ("D", n // 2)
    if family == "CII":
        p, q = params
        return "C", p + q
    raise UnsupportedFamilyError(f"unknown family {family!r}")


def _sign_matrix(dim: int, signs) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(signs[i] if i == j else 0 for j in range(dim)) for i in range(dim)
    )


def _pair_swap_negate(dim: int) -> tuple[tuple[int, ...], ...]:
    """e_{2i-1} <-> -e_{2i} on consecutive pairs; a trailing odd coordinate is fixed."""
    rows = [[0] * dim for _ in range(dim)]
    for b in range(0, dim - 1, 2):
        rows[b][b + 1] = -1
        rows[b + 1][b] = -1
    if dim % 2:
        rows[dim - 1][dim - 1] = 1
    return tuple(tuple(r) for r in rows)


def involution_spec(family: str, *params: int) -> InvolutionSpec:
    """Build a catalog involution; degenerate parameters are rejected."""
    family = family.upper()
    if family == "AI":
        _expect_params(family, params, 1)
        (n,) = params
        if n < 2:
            raise PreconditionError("AI needs n >= 2")
        return InvolutionSpec(family, params, _sign_matrix(n, [-1] * n), "transpose")
    if family == "AII":
        _expect_params(family, params, 1)
        (n,) = params
        if n < 2:
            raise PreconditionError("AII needs n >= 2 (rank l = n - 1 must be positive)")
        return InvolutionSpec(family, params, _pair_swap_negate(2 * n), "symplectic")
    if family == "AIII":
        _expect_params(family, params, 2)
        p, q = params
        n = p + q
        if p < 1 or q < p:
            raise PreconditionError("AIII needs 1 <= p <= q")
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            target = n - 1 - i if (i < p or i >= n - p) else i
            rows[target][i] = 1
        return InvolutionSpec(family, params, tuple(tuple(r) for r in rows))
    if family == "CI":
        _expect_params(family, params, 1)
        (n,) = params
        if n < 1:
            raise PreconditionError("CI needs n >= 1")
        return InvolutionSpec(family, params, _sign_matrix(n, [-1] * n))
    if family == "DIII":
        _expect_params(family, params, 1)
        (n,) = params
        if n < 2:
            raise PreconditionError("DIII needs n >= 2")
        return InvolutionSpec(family, params, _pair_swap_negate(n))
    if family == "BDI":
        _expect_params(family, params, 2)
        p, q = params
        n = p + q
        if p < 1 or q < p or n < 3:
            raise PreconditionError("BDI needs 1 <= p <= q and p + q >= 3")
        k = n // 2
        if n % 2:
            # odd n: the p = k-1 and p = k generator rows force theta* = -1
            if p >= k - 1:
                mat = _sign_matrix(k, [-1] * k)
            else:
                mat = _sign_matrix(k, [-1] * p + [1] * (k - p))
        else:
            if p == k:
                mat = _sign_matrix(k, [-1] * k)
            elif p == k - 1:
                # negate the first k-2 coordinates and swap the fork pair
                rows = [[0] * k for _ in range(k)]
                for i in range(k - 2):
                    rows[i][i] = -1
                rows[k - 2][k - 1] = 1
                rows[k - 1][k - 2] = 1
                mat = tuple(tuple(r) for r in rows)
            else:
                mat = _sign_matrix(k, [-1] * p + [1] * (k - p))
        return InvolutionSpec(family, params, mat)
    if family == "CII":
        _expect_params(family, params, 2)
        p, q = params
        n = p + q
        if p < 1 or q < p:
            raise PreconditionError("CII needs 1 <= p <= q")
        mat = _sign_matrix(n, [-1] * (2 * p) + [1] * (n - 2 * p))
        return InvolutionSpec(family, params, mat)
    raise UnsupportedFamilyError(f"unknown family {family!r}")


def _expect_params(family: str, params, count: int):
    if len(params) != count:
        raise PreconditionError(f"{family} takes {count} parameter(s), got {len(params)}")


def involution_from_json(data: dict) -> InvolutionSpec:
    return involution_spec(data["family"], *data["params"])


def catalog(max_rank: int) -> list[InvolutionSpec]:
    """Every catalog involution whose root system has rank <= max_rank."""
    specs = []
    for n in range(2, max_rank + 2):
        specs.append(involution_spec("AI", n))
    for n in range(2, max_rank // 2 + 2):
        if 2 * n - 1 <= max_rank:
            specs.append(involution_spec("AII", n))
    for n in range(2, max_rank + 2):
        for p in range(1, n // 2 + 1):
            specs.append(involution_spec("AIII", p, n - p))
    for n in range(1, max_rank + 1):
        specs.append(involution_spec("CI", n))
    for n in range(2, max_rank + 1):
        specs.append(involution_spec("DIII", n))
    for n in range(3, 2 * max_rank + 2):
        if n // 2 > max_rank:
            continue
        for p in range(1, n // 2 + 1):
            specs.append(involution_spec("BDI", p, n - p))
    for n in range(2, max_rank + 1):
        for p in range(1, n // 2 + 1):
            specs.append(involution_spec("CII", p, n - p))
    return specs


@dataclass(frozen=True)
class RestrictedRootData:
    """The split of the root system induced by theta*."""

    phi0: tuple[Weight, ...]
    phi1: tuple[Weight, ...]
    delta0: tuple[Weight, ...]
    delta1: tuple[Weight, ...]
    restricted_simples: tuple[Weight, ...]
    rank_l: int


def phi_decomposition(rs: RootSystem, inv: InvolutionSpec) -> tuple[tuple[Weight, ...], tuple[Weight, ...]]:
    """(Phi_0, Phi_1) with Phi_0 the roots fixed by theta*."""
    if rs.ambient_dim != inv.ambient_dim:
        raise PreconditionError("ambient dimension mismatch")
    phi0, phi1 = [], []
    for alpha in root_weight.all_roots(rs):
        (phi0 if inv.apply_star(alpha) == alpha else phi1).append(alpha)
    return tuple(phi0), tuple(phi1)


def check_positive_system(rs: RootSystem, inv: InvolutionSpec) -> bool:
    """Positivity gate: every positive non-fixed root must leave the positive
    system under theta*."""
    positives = set(root_weight.positive_roots(rs))
    for alpha in positives:
        image = inv.apply_star(alpha)
        if image != alpha and image in positives:
            return False
    return True


def restricted_simple_roots(rs: RootSystem, inv: InvolutionSpec) -> RestrictedRootData:
    """Delta_0, Delta_1 and the restricted simple roots (alpha - theta* alpha)/2.

    Delta_1 is ordered so that the l distinct difference vectors come first;
    the remaining entries repeat earlier differences.
    """
    if not check_positive_system(rs, inv):
        raise PreconditionError("positivity gate failed for this involution")
    phi0, phi1 = phi_decomposition(rs, inv)
    phi0_set = set(phi0)
    delta0 = tuple(a for a in rs.simple_roots if a in phi0_set)
    delta1_raw = [a for a in rs.simple_roots if a not in phi0_set]
    seen: dict[Weight, Weight] = {}
    fresh, repeats = [], []
    for a in delta1_raw:
        diff = a - inv.apply_star(a)
        if diff in seen:
            repeats.append(a)
        else:
            seen[diff] = a
            fresh.append(a)
    delta1 = tuple(fresh + repeats)
    restricted = tuple((a - inv.apply_star(a)).scale(Fraction(1, 2)) for a in fresh)
    return RestrictedRootData(phi0, phi1, delta0, delta1, restricted, len(restricted))


def is_special(inv: InvolutionSpec, lam: Weight, rs: RootSystem | None = None) -> bool:
    """theta*(lambda) = -lambda, for dominant lambda."""
    rs = rs or inv.root_system()
    if not rs.is_dominant(lam):
        raise PreconditionError("is_special requires a dominant weight")
    return inv.apply_star(lam) == -lam


def theta_an_star(inv: InvolutionSpec, chi: Weight) -> Weight:
    """The antiinvolution side on weights: -theta*(chi)."""
    return -inv.apply_star(chi)


def twisted_weight(inv: InvolutionSpec, chi: Weight) -> Weight:
    """chi - theta*(chi)."""
    return chi - inv.apply_star(chi)


def in_restricted_cone(rs: RootSystem, inv: InvolutionSpec, w: Weight) -> bool:
    """Membership of w in the nonnegative rational cone over the doubled
    restricted simple roots {2 alpha-bar_i}."""
    data = restricted_simple_roots(rs, inv)
    gens = [g.scale(2) for g in data.restricted_simples]
    if not gens:
        return w.is_zero()
    cols = linalg.transpose(linalg.mat([g.coords for g in gens]))
    if linalg.rank(linalg.mat([g.coords for g in gens])) != len(gens):
        raise PreconditionError("restricted simple roots are not independent")
    sol = linalg.solve(cols, w.coords)
    if sol is None:
        return False
    return all(c >= 0 for c in sol)


def twisted_weight_in_support(rs: RootSystem, inv: InvolutionSpec, lam: Weight, mu: Weight) -> bool:
    """Companion predicate of twisted_weight: the twisted weight of mu must be
    of the form 2(lambda - sum n_i alpha-bar_i) with n_i >= 0, i.e.
    2 lambda - (mu - theta* mu) lies in the cone over {2 alpha-bar_i}."""
    return in_restricted_cone(rs, inv, lam.scale(2) - twisted_weight(inv, mu))


def spherical_generators(inv: InvolutionSpec, rs: RootSystem | None = None) -> tuple[Weight, ...]:
    """The catalog generators of the spherical-weight semigroup, in
    fundamental-weight coordinates."""
    rs = rs or inv.root_system()
    omega = root_weight.fundamental_weights(rs)
    fam, params = inv.family, inv.params
    if fam == "AI":
        return tuple(om.scale(2) for om in omega)
    if fam == "AII":
        (n,) = params
        return tuple(omega[i - 1] for i in range(2, 2 * n - 1, 2))
    if fam == "AIII":
        p, q = params
        n = p + q
        return tuple(omega[i - 1] + omega[n - i - 1] for i in range(1, p + 1))
    if fam == "CI":
        return tuple(om.scale(2) for om in omega)
    if fam == "DIII":
        (n,) = params
        evens = [omega[i - 1] for i in range(2, n - 1, 2)]
        if n % 2 == 0:
            return tuple(evens + [omega[n - 1].scale(2)])
        return tuple(evens + [omega[n - 2] + omega[n - 1]])
    if fam == "BDI":
        p, q = params
        n = p + q
        k = n // 2
        if n % 2:
            if p < k - 1:
                return tuple(omega[i].scale(2) for i in range(p))
            if p == k - 1:
                head = [omega[i].scale(2) for i in range(k - 2)]
                return tuple(head + [(omega[k - 2] + omega[k - 1]).scale(2)])
            return tuple(omega[i].scale(2) for i in range(k))
        if p < k:
            return tuple(omega[i].scale(2) for i in range(p))
        head = [omega[i].scale(2) for i in range(k - 1)]
        return tuple(head + [omega[k - 1].scale(4)])
    if fam == "CII":
        p, q = params
        return tuple(omega[i].scale(2) for i in range(2 * p))
    raise UnsupportedFamilyError(f"unknown family {fam!r}")


def check_weight_set_stability(rs: RootSystem, inv: InvolutionSpec, lam: Weight) -> bool:
    """True iff -theta* maps the weight set Pi(lambda) onto itself exactly.

    Requires lambda special and dominant; a non-special lambda violates the
    hypothesis and is rejected with NotSpecialError.
    """
    if not rs.is_dominant(lam):
        raise PreconditionError("stability check requires a dominant weight")
    if inv.apply_star(lam) != -lam:
        raise NotSpecialError("weight is not special for this involution")
    pi = set(root_weight.weight_set(rs, lam))
    return {theta_an_star(inv, mu) for mu in pi} == pi
