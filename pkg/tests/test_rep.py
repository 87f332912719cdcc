import numpy as np
import pytest

from lincat.errors import (
    GroupMismatch,
    ModelMismatch,
    NonIntegralMultiplicity,
)
from lincat.groups import (
    GroupHom,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    identity_hom,
    symmetric_group,
    trivial_group,
    trivial_hom,
)
from lincat.rep import (
    Character,
    character_inner,
    eps_L,
    eps_R,
    eta_L,
    eta_R,
    hom_dim,
    induce_rep,
    intertwiner_basis,
    irreps,
    nakayama,
    regular_rep,
    restrict_rep,
    trivial_rep,
    verify_zigzag,
)

TOL = 1e-8


def induced_character_oracle(f, chi_values, class_index_src, g_src, h_tgt):
    """Oracle: chi_ind(a) = (1/|G|) sum_{x in H} sum_{g : f(g) = x^-1 a x} chi(g),
    computed from character values alone."""
    out = []
    for cls in conjugacy_classes(h_tgt):
        a = cls[0]
        total = 0.0 + 0.0j
        for x in range(h_tgt.order):
            conj = h_tgt.mul(h_tgt.mul(h_tgt.inv[x], a), x)
            for g in range(g_src.order):
                if f(g) == conj:
                    total += chi_values[class_index_src[g]]
        out.append(total / g_src.order)
    return np.array(out)


def class_index(g):
    idx = {}
    for ci, cls in enumerate(conjugacy_classes(g)):
        for a in cls:
            idx[a] = ci
    return idx


# --- irreps -----------------------------------------------------------------


def test_irreps_trivial(one):
    rs = irreps(one)
    assert len(rs) == 1 and rs[0].dim == 1


def test_irreps_z2_characters(z2):
    rs = irreps(z2)
    vals = {tuple(int(round(v.real)) for v in r.character.values) for r in rs}
    # oracle: decomposing the 2-dim regular representation gives exactly these
    assert vals == {(1, 1), (1, -1)}


def test_irreps_s3(s3):
    rs = irreps(s3)
    assert sorted(r.dim for r in rs) == [1, 1, 2]
    assert sum(r.dim**2 for r in rs) == 6


@pytest.mark.parametrize(
    "maker",
    [
        trivial_group,
        lambda: cyclic_group(2),
        lambda: cyclic_group(3),
        lambda: cyclic_group(4),
        lambda: direct_product(cyclic_group(2), cyclic_group(2)),
        lambda: symmetric_group(3),
        lambda: symmetric_group(4),
    ],
)
def test_irreps_complete_orthonormal_unitary(maker):
    g = maker()
    rs = irreps(g)
    assert sum(r.dim**2 for r in rs) == g.order
    for i, a in enumerate(rs):
        for j, b in enumerate(rs):
            want = 1.0 if i == j else 0.0
            assert abs(character_inner(a.character, b.character) - want) < TOL
    for r in rs:
        r.check()
        for a in range(g.order):
            m = r.matrices[a]
            assert np.max(np.abs(m @ m.conj().T - np.eye(r.dim))) < TOL


def test_irreps_deterministic_order(s3):
    a = irreps(s3, use_cache=False)
    b = irreps(s3, use_cache=False)
    for ra, rb in zip(a, b):
        assert np.max(np.abs(ra.matrices - rb.matrices)) == 0.0
    dims = [r.dim for r in a]
    assert dims == sorted(dims)


# --- hom_dim ----------------------------------------------------------------


def test_hom_dim_orthonormality(z2):
    rs = irreps(z2)
    triv = [r for r in rs if abs(r.character.values[1] - 1) < TOL][0]
    sign = [r for r in rs if abs(r.character.values[1] + 1) < TOL][0]
    assert hom_dim(triv.character, triv.character) == 1
    assert hom_dim(triv.character, sign.character) == 0


def test_hom_dim_regular_multiplicities(s3):
    # oracle: the regular character pairs with each irrep by its dimension
    reg = regular_rep(s3).character
    for r in irreps(s3):
        assert hom_dim(reg, r.character) == r.dim


def test_hom_dim_group_mismatch(z2, z3):
    with pytest.raises(GroupMismatch):
        hom_dim(irreps(z2)[0].character, irreps(z3)[0].character)


def test_hom_dim_non_integral(z2):
    chi = Character(z2, np.array([1.0, 0.5]))
    with pytest.raises(NonIntegralMultiplicity):
        hom_dim(chi, chi)


# --- restriction ------------------------------------------------------------


def test_restrict_identity(s3):
    w = irreps(s3)[2]
    res = restrict_rep(identity_hom(s3), w)
    assert np.max(np.abs(res.matrices - w.matrices)) == 0.0


def test_restrict_2dim_splits(z2_in_s3, s3):
    w2 = [r for r in irreps(s3) if r.dim == 2][0]
    res = restrict_rep(z2_in_s3, w2)
    # oracle: restricted character values by composing with the inclusion
    ci = class_index(s3)
    sub = z2_in_s3.source
    vals = [w2.character.values[ci[z2_in_s3(a)]] for a in [0, 1]]
    assert np.allclose(res.character.values, vals)
    mults = [hom_dim(res.character, r.character) for r in irreps(sub)]
    assert sorted(mults) == [1, 1]  # trivial + sign


def test_restrict_along_trivial_hom(s3, one):
    w2 = [r for r in irreps(s3) if r.dim == 2][0]
    # pull back along 1 -> S3: everything acts as the identity
    f = trivial_hom(one, s3)
    res = restrict_rep(f, w2)
    assert np.max(np.abs(res.matrices[0] - np.eye(2))) < TOL


def test_restrict_group_mismatch(z2_in_s3, z2):
    with pytest.raises(GroupMismatch):
        restrict_rep(z2_in_s3, trivial_rep(z2))


# --- induction --------------------------------------------------------------


def test_induce_identity(s3):
    w = [r for r in irreps(s3) if r.dim == 2][0]
    ind = induce_rep(identity_hom(s3), w)
    assert ind.dim == 2
    assert abs(character_inner(ind.character, w.character) - 1) < TOL


def test_induce_trivial_from_z2_to_s3(z2_in_s3, s3):
    sub = z2_in_s3.source
    ind = induce_rep(z2_in_s3, trivial_rep(sub))
    assert ind.dim == 3
    ind.check()
    # oracle: induced character computed from character values alone
    chi = induced_character_oracle(
        z2_in_s3, [1.0, 1.0], class_index(sub), sub, s3
    )
    assert np.allclose(ind.character.values, chi, atol=TOL)
    mults = {
        r.dim: hom_dim(ind.character, r.character) for r in irreps(s3)
    }
    assert mults[2] == 1  # trivial + the 2-dim irrep


def test_induce_sign_along_collapse(z2):
    sign = [r for r in irreps(z2) if abs(r.character.values[1] + 1) < TOL][0]
    f = trivial_hom(z2, trivial_group())
    ind = induce_rep(f, sign)
    # oracle: the averaging projector (1 + sign)/2 has rank 0
    p = (sign.matrices[0] + sign.matrices[1]) / 2
    assert np.linalg.matrix_rank(p) == 0
    assert ind.dim == 0


def test_induce_dimension_law(z2_in_s3, z3_in_s3, z4, z2):
    cases = [
        (z2_in_s3, trivial_rep(z2_in_s3.source)),
        (z3_in_s3, trivial_rep(z3_in_s3.source)),
        (GroupHom(z4, z2, [0, 1, 0, 1]), regular_rep(z4)),
    ]
    for f, v in cases:
        ind = induce_rep(f, v)
        image = f.image()
        n_cosets = f.target.order // len(image)
        p = sum(v.matrices[k] for k in f.kernel()) / len(f.kernel())
        inv_dim = int(round(np.trace(p).real))
        assert ind.dim == n_cosets * inv_dim


def test_frobenius_reciprocity_all_fixture_homs(z2_in_s3, z3_in_s3, z4, z2):
    homs = [
        z2_in_s3,
        z3_in_s3,
        GroupHom(z4, z2, [0, 1, 0, 1]),
        trivial_hom(z2, trivial_group()),
    ]
    for f in homs:
        for v in irreps(f.source):
            ind_chi = induce_rep(f, v).character
            for w in irreps(f.target):
                lhs = hom_dim(ind_chi, w.character)
                rhs = hom_dim(v.character, restrict_rep(f, w).character)
                assert lhs == rhs


# --- intertwiners -----------------------------------------------------------


def test_intertwiner_schur(s3):
    w = [r for r in irreps(s3) if r.dim == 2][0]
    basis = intertwiner_basis(w, w)
    assert len(basis) == 1
    b = basis[0].entries
    # scaled identity
    off = b - np.trace(b) / 2 * np.eye(2)
    assert np.max(np.abs(off)) < TOL


def test_intertwiner_regular_z2(z2):
    reg = regular_rep(z2)
    basis = intertwiner_basis(reg, reg)
    assert len(basis) == 2


def test_intertwiner_triv_vs_sign(z2):
    rs = irreps(z2)
    triv = [r for r in rs if abs(r.character.values[1] - 1) < TOL][0]
    sign = [r for r in rs if abs(r.character.values[1] + 1) < TOL][0]
    assert intertwiner_basis(triv, sign) == []


def test_intertwiner_equivariance_residual(z2_in_s3, s3):
    w1 = irreps(s3)[1]
    w2 = [r for r in irreps(s3) if r.dim == 2][0]
    r1 = restrict_rep(z2_in_s3, w1)
    r2 = restrict_rep(z2_in_s3, w2)
    g = r1.group
    for b in intertwiner_basis(r1, r2):
        for a in range(g.order):
            res = b.entries @ r1.matrices[a] - r2.matrices[a] @ b.entries
            assert np.max(np.abs(res)) < TOL


def test_intertwiner_orthonormal(z2):
    reg = regular_rep(z2)
    basis = intertwiner_basis(reg, reg)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            want = 1.0 if i == j else 0.0
            assert abs(np.sum(np.conj(a.entries) * b.entries) - want) < TOL


# --- nakayama ---------------------------------------------------------------


def test_nakayama_trivial(one):
    n = nakayama(identity_hom(one), trivial_rep(one))
    assert np.allclose(n.entries, [[1.0]])


def test_nakayama_identity_on_z2(z2):
    n = nakayama(identity_hom(z2), trivial_rep(z2))
    assert n.entries.shape == (1, 1)
    assert abs(n.entries[0, 0]) > 1e-12
    assert n.condition_number < 1e6


def test_nakayama_z2_to_s3(z2_in_s3):
    n = nakayama(z2_in_s3, trivial_rep(z2_in_s3.source))
    assert n.entries.shape == (3, 3)
    assert np.linalg.matrix_rank(n.entries) == 3
    assert n.condition_number < 1e6


def test_nakayama_group_mismatch(z2_in_s3, s3):
    with pytest.raises(GroupMismatch):
        nakayama(z2_in_s3, trivial_rep(s3))


# --- units and counits ------------------------------------------------------


def test_units_identity_hom_are_identities(z2):
    f = identity_hom(z2)
    reg = regular_rep(z2)
    for mk, model in [
        (eta_L, reg),
        (eta_R, reg),
        (eps_L, reg),
        (eps_R, reg),
    ]:
        m = mk(f, model).entries
        assert m.shape == (2, 2)
        assert np.max(np.abs(m - np.eye(2))) < TOL


def test_eta_L_injects_identity_coset(z2_in_s3):
    triv = trivial_rep(z2_in_s3.source)
    m = eta_L(z2_in_s3, triv).entries
    assert m.shape == (3, 1)
    assert abs(m[0, 0] - 1) < TOL
    assert np.max(np.abs(m[1:, :])) < TOL


def test_eps_R_surjective_coefficient(z2):
    # for the collapse Z2 -> 1 on the trivial rep, the counit scales by
    # #source / #target = 2
    f = trivial_hom(z2, trivial_group())
    triv = trivial_rep(z2)
    m = eps_R(f, triv).entries
    assert m.shape == (1, 1)
    assert abs(m[0, 0] - 2.0) < TOL


def test_eta_R_displayed_formula(z2_in_s3, s3):
    # eta_R on a basis vector matches (1/#G) sum_h h^-1 (x) h(v) directly
    g_model = trivial_rep(s3)
    ind = induce_rep(z2_in_s3, restrict_rep(z2_in_s3, g_model))
    m = eta_R(z2_in_s3, g_model).entries
    acc = np.zeros(ind.dim, dtype=complex)
    for a in range(s3.order):
        acc += ind.tensor_coords(s3.inv[a], np.array([1.0 + 0j]))
    acc /= z2_in_s3.source.order
    assert np.allclose(m[:, 0], acc, atol=TOL)


def test_unit_counit_model_mismatch(z2_in_s3, s3):
    with pytest.raises(ModelMismatch):
        eta_L(z2_in_s3, trivial_rep(s3))
    with pytest.raises(ModelMismatch):
        eps_L(z2_in_s3, trivial_rep(z2_in_s3.source))


# --- zigzag -----------------------------------------------------------------


def zigzag_probes(f):
    return [
        trivial_rep(f.source),
        regular_rep(f.source),
        trivial_rep(f.target),
        regular_rep(f.target),
    ]


def test_zigzag_identity_hom(z2):
    f = identity_hom(z2)
    rep = verify_zigzag(f, zigzag_probes(f))
    assert rep.max_deviation < 1e-12


def test_zigzag_inclusion(z2_in_s3, s3):
    probes = zigzag_probes(z2_in_s3) + [
        r for r in irreps(s3)
    ]
    rep = verify_zigzag(z2_in_s3, probes)
    assert rep.ok(TOL)


def test_zigzag_collapse(z2):
    f = trivial_hom(z2, trivial_group())
    rep = verify_zigzag(f, zigzag_probes(f))
    assert rep.ok(TOL)


def test_zigzag_all_fixture_homs(z2_in_s3, z3_in_s3, z4, z2):
    homs = [
        z2_in_s3,
        z3_in_s3,
        GroupHom(z4, z2, [0, 1, 0, 1]),
        trivial_hom(z2, trivial_group()),
    ]
    for f in homs:
        rep = verify_zigzag(f, zigzag_probes(f))
        assert rep.ok(TOL), f"zigzag failed for {f}"


def test_irrep_cache_concurrent_reads(s4):
    import threading

    from lincat.rep import _IRREP_CACHE

    _IRREP_CACHE.clear()
    results = [None] * 8
    errors = []

    def work(i):
        try:
            results[i] = irreps(s4)
        except Exception as exc:  # surface failures to the main thread
            errors.append(exc)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    dims = {tuple(r.dim for r in rs) for rs in results}
    assert len(dims) == 1
