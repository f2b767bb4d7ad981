from fractions import Fraction

import pytest

from symmon import involution as iv
from symmon import linalg
from symmon import root_weight as rw
from symmon.errors import NotSpecialError, PreconditionError, UnsupportedFamilyError
from symmon.involution import InvolutionSpec


def identity_involution(rs):
    """theta* = id; not in the catalog, used only for self-tests."""
    n = rs.ambient_dim
    eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return InvolutionSpec("ID", (), eye)


def test_construction_rejects_degenerate_params():
    for bad in (("AI", 1), ("AII", 1), ("AIII", 0, 3), ("AIII", 3, 2), ("CI", 0),
                ("DIII", 1), ("BDI", 0, 4), ("BDI", 2, 1), ("CII", 0, 2)):
        with pytest.raises(PreconditionError):
            iv.involution_spec(*bad)
    with pytest.raises(UnsupportedFamilyError):
        iv.involution_spec("EX", 4)


def test_theta_star_is_involution_and_permutes_roots():
    for spec in iv.catalog(5):
        rs = spec.root_system()
        dim = spec.ambient_dim
        m = linalg.mat([[Fraction(e) for e in row] for row in spec.theta_star])
        assert linalg.mat_mul(m, m) == linalg.identity_mat(dim), spec
        roots = set(rw.all_roots(rs))
        assert {spec.apply_star(a) for a in roots} == roots, spec
        sample = list(rs.simple_roots) + list(rw.fundamental_weights(rs))
        for a in sample:
            for b in sample:
                assert rs.form(spec.apply_star(a), spec.apply_star(b)) == rs.form(a, b)


def test_positivity_gate_holds_for_catalog():
    for spec in iv.catalog(5):
        assert iv.check_positive_system(spec.root_system(), spec), spec


def test_phi_decomposition():
    a3 = rw.root_system("A", 3)
    ai = iv.involution_spec("AI", 4)
    phi0, phi1 = iv.phi_decomposition(a3, ai)
    assert phi0 == () and len(phi1) == 12
    ident = identity_involution(a3)
    phi0, phi1 = iv.phi_decomposition(a3, ident)
    assert len(phi0) == 12 and phi1 == ()
    assert iv.check_positive_system(a3, ident)  # vacuous
    aii = iv.involution_spec("AII", 2)
    phi0, phi1 = iv.phi_decomposition(a3, aii)
    assert len(phi0) == 4 and len(phi1) == 8
    with pytest.raises(PreconditionError):
        iv.phi_decomposition(rw.root_system("A", 2), ai)


def test_restricted_simple_roots():
    # AI: theta* = -id, so every restricted simple root is the simple root itself
    for n in (3, 4, 5):
        rs = rw.root_system("A", n - 1)
        data = iv.restricted_simple_roots(rs, iv.involution_spec("AI", n))
        assert data.rank_l == n - 1
        assert data.restricted_simples == rs.simple_roots
        assert data.delta0 == ()
    # AII on A_{2n-1} has l = n - 1
    for n in (2, 3):
        rs = rw.root_system("A", 2 * n - 1)
        data = iv.restricted_simple_roots(rs, iv.involution_spec("AII", n))
        assert data.rank_l == n - 1
        assert len(data.delta0) == n
    # AIII(1, n-1) has l = 1
    for n in (3, 4, 5):
        rs = rw.root_system("A", n - 1)
        data = iv.restricted_simple_roots(rs, iv.involution_spec("AIII", 1, n - 1))
        assert data.rank_l == 1
    # AIII(p, q) has l = p
    data = iv.restricted_simple_roots(rw.root_system("A", 3), iv.involution_spec("AIII", 2, 2))
    assert data.rank_l == 2
    # restricted simples are pairwise distinct and nonzero
    for spec in iv.catalog(4):
        data = iv.restricted_simple_roots(spec.root_system(), spec)
        assert len(set(data.restricted_simples)) == data.rank_l
        assert all(not a.is_zero() for a in data.restricted_simples)
        assert set(data.phi0) | set(data.phi1) == set(rw.all_roots(spec.root_system()))
        assert not set(data.phi0) & set(data.phi1)


def test_is_special_examples():
    a3 = rw.root_system("A", 3)
    ai = iv.involution_spec("AI", 4)
    fw = rw.fundamental_weights(a3)
    assert iv.is_special(ai, fw[0].scale(2), a3)
    for w in fw:
        assert iv.is_special(ai, w, a3)
    aii = iv.involution_spec("AII", 2)
    assert not iv.is_special(aii, fw[0], a3)
    assert iv.is_special(aii, fw[1], a3)
    with pytest.raises(PreconditionError):
        iv.is_special(ai, -fw[0], a3)


def test_is_special_additive():
    a3 = rw.root_system("A", 3)
    aii = iv.involution_spec("AII", 2)
    fw = rw.fundamental_weights(a3)
    specials = [w for w in list(fw) + [fw[1].scale(2), fw[1].scale(3)] if iv.is_special(aii, w, a3)]
    for lam in specials:
        for mu in specials:
            assert iv.is_special(aii, lam + mu, a3)


def test_theta_an_star():
    a3 = rw.root_system("A", 3)
    aii = iv.involution_spec("AII", 2)
    fw = rw.fundamental_weights(a3)
    lam = fw[1]  # special
    assert iv.theta_an_star(aii, lam) == lam
    zero = rw.weight([0, 0, 0, 0])
    assert iv.theta_an_star(aii, zero) == zero
    ai = iv.involution_spec("AI", 4)
    for chi in list(fw) + list(a3.simple_roots):
        assert iv.theta_an_star(ai, chi) == chi


def test_spherical_generators_examples():
    a3 = rw.root_system("A", 3)
    fw = rw.fundamental_weights(a3)
    assert iv.spherical_generators(iv.involution_spec("AI", 4)) == (
        fw[0].scale(2), fw[1].scale(2), fw[2].scale(2),
    )
    assert iv.spherical_generators(iv.involution_spec("AII", 2)) == (fw[1],)
    c2 = rw.root_system("C", 2)
    fw2 = rw.fundamental_weights(c2)
    assert iv.spherical_generators(iv.involution_spec("CII", 1, 1)) == (
        fw2[0].scale(2), fw2[1].scale(2),
    )
    # AIII(p, q): omega_i + omega_{n-i} for i = 1..p
    gens = iv.spherical_generators(iv.involution_spec("AIII", 2, 2))
    assert gens == (fw[0] + fw[2], fw[1].scale(2))


def test_every_catalog_generator_is_special():
    for spec in iv.catalog(4):
        rs = spec.root_system()
        for lam in iv.spherical_generators(spec, rs):
            assert rs.is_dominant(lam)
            assert iv.is_special(spec, lam, rs), (spec.family, spec.params, lam)


def test_weight_set_stability():
    a2 = rw.root_system("A", 2)
    ai3 = iv.involution_spec("AI", 3)
    assert iv.check_weight_set_stability(a2, ai3, rw.fundamental_weights(a2)[0].scale(2))
    a3 = rw.root_system("A", 3)
    aii = iv.involution_spec("AII", 2)
    fw = rw.fundamental_weights(a3)
    assert iv.check_weight_set_stability(a3, aii, fw[1])
    assert iv.check_weight_set_stability(a3, aii, rw.weight([0, 0, 0, 0]))
    with pytest.raises(NotSpecialError):
        iv.check_weight_set_stability(a3, aii, fw[0])


def test_twisted_weight():
    a3 = rw.root_system("A", 3)
    aii = iv.involution_spec("AII", 2)
    fixed = a3.simple_roots[0]  # alpha_1 is theta*-fixed for AII
    assert iv.twisted_weight(aii, fixed).is_zero()
    ai = iv.involution_spec("AI", 4)
    lam = rw.fundamental_weights(a3)[1].scale(2)
    assert iv.twisted_weight(ai, lam) == lam.scale(2)


def test_twisted_weight_support_shape():
    # the twisted weights of Pi(lambda) sit at 2(lambda - nonneg combo of
    # restricted simples)
    cases = [
        (rw.root_system("A", 3), iv.involution_spec("AII", 2), (0, 1, 0)),
        (rw.root_system("A", 2), iv.involution_spec("AI", 3), (2, 0)),
        (rw.root_system("A", 3), iv.involution_spec("AIII", 1, 3), (1, 0, 1)),
    ]
    for rs, spec, coeffs in cases:
        lam = rw.from_fundamental(rs, coeffs)
        for mu in rw.weight_set(rs, lam):
            assert iv.twisted_weight_in_support(rs, spec, lam, mu)


def test_in_restricted_cone():
    a3 = rw.root_system("A", 3)
    aii = iv.involution_spec("AII", 2)
    data = iv.restricted_simple_roots(a3, aii)
    twice = data.restricted_simples[0].scale(2)
    assert iv.in_restricted_cone(a3, aii, twice)
    assert iv.in_restricted_cone(a3, aii, rw.weight([0, 0, 0, 0]))
    assert not iv.in_restricted_cone(a3, aii, -twice)


def test_theta0_matches_theta_star_on_diagonal_tori():
    import itertools

    from symmon import finite_field as ff

    for spec in (iv.involution_spec("AI", 3), iv.involution_spec("AII", 2)):
        dim = spec.ambient_dim
        q = 3
        for diag in itertools.product((1, 2), repeat=dim):
            t = ff.fq_matrix(q, [[diag[i] if i == j else 0 for j in range(dim)] for i in range(dim)])
            theta_t = ff.theta_an(t, spec).inverse()
            assert theta_t.is_diagonal()
            for i in range(dim):
                expected = 1
                for j in range(dim):
                    e = spec.theta_star[j][i]
                    expected = expected * pow(diag[j], e % (q - 1), q) % q
                assert theta_t.rows[i][i] == expected


def test_json_roundtrip():
    spec = iv.involution_spec("AIII", 1, 3)
    data = spec.to_json()
    assert data["family"] == "AIII" and data["params"] == [1, 3]
    assert len(data["theta_star"]) == 16
    assert iv.involution_from_json(data) == spec
