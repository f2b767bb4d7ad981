"""The rook monoid: partial permutation matrices of [n].

Within the monoid of all n x n matrices these play the role the Weyl group
plays inside the general linear group.  Elements are stored as row maps, not
matrices: map[i] = j > 0 places a 1 at row i+1, column j, and map[i] = 0
leaves row i+1 empty.  Conversions to finite-field matrices are explicit
(see finite_field.from_rook).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

from .errors import PreconditionError, ResourceLimitError

ENUM_GUARD_N = 6
WEW_GUARD_N = 5
SYMMETRIC_GUARD_N = 8


@dataclass(frozen=True, order=True)
class RookElement:
    """A partial permutation of [n], injective on its domain."""

    map: tuple[int, ...]

    def __post_init__(self):
        n = len(self.map)
        nonzero = [j for j in self.map if j != 0]
        if any(not 0 <= j <= n for j in self.map) or len(set(nonzero)) != len(nonzero):
            raise PreconditionError(f"not a partial permutation: {self.map}")

    @property
    def n(self) -> int:
        return len(self.map)

    @property
    def rank(self) -> int:
        return sum(1 for j in self.map if j != 0)

    def domain(self) -> frozenset[int]:
        """Rows carrying a 1 (1-based)."""
        return frozenset(i + 1 for i, j in enumerate(self.map) if j != 0)

    def image(self) -> frozenset[int]:
        """Columns carrying a 1 (1-based)."""
        return frozenset(j for j in self.map if j != 0)

    def transpose(self) -> "RookElement":
        m = [0] * self.n
        for i, j in enumerate(self.map):
            if j != 0:
                m[j - 1] = i + 1
        return RookElement(tuple(m))

    def is_idempotent(self) -> bool:
        return all(j == 0 or j == i + 1 for i, j in enumerate(self.map))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def is_permutation(self) -> bool:
        return self.rank == self.n

    def zero_one_rows(self) -> tuple[tuple[int, ...], ...]:
        """The element as a 0/1 matrix (tuple of rows)."""
        n = self.n
        return tuple(
            tuple(1 if self.map[i] == j + 1 else 0 for j in range(n)) for i in range(n)
        )

    def diagram(self) -> str:
        """One-line rook diagram "j_1 j_2 ... j_n" with 0 for empty rows."""
        return " ".join(str(j) for j in self.map)


def identity_rook(n: int) -> RookElement:
    return RookElement(tuple(range(1, n + 1)))


def zero_rook(n: int) -> RookElement:
    return RookElement((0,) * n)


def idempotent(n: int, support) -> RookElement:
    """The diagonal idempotent e_I with 1s exactly on the rows in support."""
    s = set(support)
    return RookElement(tuple(i if i in s else 0 for i in range(1, n + 1)))


def from_permutation(perm) -> RookElement:
    """Rook element of a permutation given in one-line notation (1-based values)."""
    return RookElement(tuple(perm))


def rook_count(n: int) -> int:
    return sum(math.comb(n, k) ** 2 * math.factorial(k) for k in range(n + 1))


def enumerate_rook(n: int) -> tuple[RookElement, ...]:
    """All partial permutation matrices of [n], in canonical (map-lex) order."""
    if n > ENUM_GUARD_N:
        raise ResourceLimitError(f"enumerate_rook guard is n <= {ENUM_GUARD_N}")
    out = []
    for k in range(n + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.permutations(range(1, n + 1), k):
                m = [0] * n
                for i, j in zip(rows, cols):
                    m[i] = j
                out.append(RookElement(tuple(m)))
    return tuple(sorted(out))


def multiply(r: RookElement, s: RookElement) -> RookElement:
    """Composition as 0/1 matrix product r . s."""
    if r.n != s.n:
        raise PreconditionError("size mismatch")
    m = []
    for j in r.map:
        m.append(s.map[j - 1] if j != 0 else 0)
    return RookElement(tuple(m))


def green_relation(r: RookElement, s: RookElement, rel: str) -> bool:
    """Green's relations via the big unit group: L is equal row spaces (equal
    column supports), R is equal column spaces (equal row supports), J is equal
    rank, H is L and R."""
    if r.n != s.n:
        raise PreconditionError("size mismatch")
    rel = rel.upper()
    if rel == "L":
        return r.image() == s.image()
    if rel == "R":
        return r.domain() == s.domain()
    if rel == "J":
        return r.rank == s.rank
    if rel == "H":
        return r.image() == s.image() and r.domain() == s.domain()
    raise PreconditionError(f"unknown Green relation {rel!r}")


def idempotent_order(e: RookElement, f: RookElement) -> bool:
    """e <= f iff ef = e = fe (both arguments must be idempotent)."""
    if not (e.is_idempotent() and f.is_idempotent()):
        raise PreconditionError("idempotent_order needs idempotent arguments")
    return multiply(e, f) == e and multiply(f, e) == e


@dataclass(frozen=True)
class CrossSection:
    """The chain e_0 < e_1 < ... < e_n with e_k = diag(1^k, 0^(n-k))."""

    chain: tuple[RookElement, ...]


def cross_section(n: int) -> CrossSection:
    if n > ENUM_GUARD_N:
        raise ResourceLimitError(f"cross_section guard is n <= {ENUM_GUARD_N}")
    return CrossSection(tuple(idempotent(n, range(1, k + 1)) for k in range(n + 1)))


def diagonal_idempotents(n: int) -> tuple[RookElement, ...]:
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        out.append(idempotent(n, (i + 1 for i, b in enumerate(bits) if b)))
    return tuple(sorted(out))


def conjugates_of_cross_section(n: int) -> frozenset[RookElement]:
    """Union of w Lambda w^{-1} over the unit group; should be all of E(T-bar)."""
    chain = cross_section(n).chain
    out = set()
    for perm in itertools.permutations(range(1, n + 1)):
        w = from_permutation(perm)
        winv = w.transpose()
        for e in chain:
            out.add(multiply(multiply(w, e), winv))
    return frozenset(out)


def w_e_w_decomposition(n: int) -> tuple[tuple[RookElement, ...], ...]:
    """Partition of the rook monoid into the classes W e_k W, indexed by rank k."""
    if n > WEW_GUARD_N:
        raise ResourceLimitError(f"w_e_w_decomposition guard is n <= {WEW_GUARD_N}")
    classes: list[list[RookElement]] = [[] for _ in range(n + 1)]
    for r in enumerate_rook(n):
        classes[r.rank].append(r)
    return tuple(tuple(sorted(c)) for c in classes)


def southwest_rank_table(r: RookElement) -> tuple[tuple[int, ...], ...]:
    """Table t[i][j] = rank of the submatrix on rows >= i+1, columns <= j+1."""
    n = r.n
    return tuple(
        tuple(
            sum(1 for t in range(i, n) if 0 < r.map[t] <= j + 1) for j in range(n)
        )
        for i in range(n)
    )


def bruhat_leq(r: RookElement, s: RookElement) -> bool:
    """Bruhat-Chevalley order via southwest-rank dominance (Borel = upper triangular).

    r <= s iff rank r[i..n, 1..j] <= rank s[i..n, 1..j] for all i, j.
    """
    if r.n != s.n:
        raise PreconditionError("size mismatch")
    n = r.n
    for i in range(n):
        for j in range(n):
            if sum(1 for t in range(i, n) if 0 < r.map[t] <= j + 1) > sum(
                1 for t in range(i, n) if 0 < s.map[t] <= j + 1
            ):
                return False
    return True


def symmetric_rook_elements(n: int, fpf: bool = False) -> tuple[RookElement, ...]:
    """All r with r equal to its transpose; with fpf also a zero diagonal."""
    if n > SYMMETRIC_GUARD_N:
        raise ResourceLimitError(f"symmetric_rook_elements guard is n <= {SYMMETRIC_GUARD_N}")
    out = []
    for r in _partial_involutions(n):
        if fpf and any(r.map[i] == i + 1 for i in range(n)):
            continue
        out.append(r)
    return tuple(sorted(out))


def _partial_involutions(n: int) -> list[RookElement]:
    found: list[RookElement] = []

    def rec(i: int, m: list[int]):
        if i == n:
            found.append(RookElement(tuple(m)))
            return
        if m[i] != 0:
            rec(i + 1, m)
            return
        rec(i + 1, m)  # row stays empty
        m[i] = i + 1  # fixed point
        rec(i + 1, m)
        m[i] = 0
        for j in range(i + 1, n):
            if m[j] == 0:
                m[i], m[j] = j + 1, i + 1
                rec(i + 1, m)
                m[i], m[j] = 0, 0

    rec(0, [0] * n)
    return found


def hasse_edges(elements, leq) -> list[tuple]:
    """Covering pairs (x, y) of a finite poset, by transitive reduction."""
    elems = list(elements)
    edges = []
    for x in elems:
        for y in elems:
            if x == y or not leq(x, y):
                continue
            if any(z != x and z != y and leq(x, z) and leq(z, y) for z in elems):
                continue
            edges.append((x, y))
    return edges


def poset_to_dot(elements, leq, label=lambda x: x.diagram()) -> str:
    """Hasse diagram of a poset over rook elements as DOT source."""
    elems = sorted(elements)
    lines = ["digraph poset {", "  rankdir=BT;"]
    index = {x: i for i, x in enumerate(elems)}
    for x in elems:
        lines.append(f'  n{index[x]} [label="{label(x)}"];')
    for x, y in sorted(hasse_edges(elems, leq), key=lambda e: (e[0], e[1])):
        lines.append(f"  n{index[x]} -> n{index[y]};")
    lines.append("}")
    return "\n".join(lines)


def poset_to_json(elements, leq) -> str:
    """Edge list {"nodes": [...], "edges": [[lo, hi], ...]} of the Hasse diagram."""
    elems = sorted(elements)
    edges = sorted(hasse_edges(elems, leq), key=lambda e: (e[0], e[1]))
    return json.dumps(
        {
            "nodes": [x.diagram() for x in elems],
            "edges": [[x.diagram(), y.diagram()] for x, y in edges],
        }
    )
