"""Complex representation theory of finite groups given by tables.

Everything here works in double-precision complex arithmetic.  Irreducible
representations are found by decomposing the regular representation with
seeded random equivariant operators, so all bases are reproducible for a
fixed seed.  Induction along an arbitrary homomorphism f : G -> H is realized
on the concrete space

    (left coset reps of im f in H)  x  (ker f)-invariants of V,

with the invariants materialized through the averaging projector.  The
Nakayama map identifies this tensor model with the hom model
Hom_{C[G]}(C[H], V) and makes the induction a two-sided adjoint of
restriction; the four unit/counit maps of the two adjunctions are produced as
explicit matrices in these distinguished bases.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    GroupMismatch,
    ModelMismatch,
    NonIntegralMultiplicity,
    NumericalFailure,
    RankMismatch,
    SingularMap,
)
from .groups import FinGroup, GroupHom, conjugacy_classes

DEFAULT_SEED = 1729
DEFAULT_TOL = 1e-8
INT_TOL = 1e-6


@dataclass
class LinearMap:
    """A complex matrix with explicit row/column counts (either may be zero)."""

    entries: np.ndarray

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=complex)
        if self.entries.ndim != 2:
            raise ValueError("LinearMap entries must be a matrix")
        if not np.all(np.isfinite(self.entries)):
            raise ValueError("LinearMap entries must be finite")

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]


@dataclass
class Character:
    """Class function of a representation: one value per conjugacy class."""

    group: FinGroup
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        self.classes = conjugacy_classes(self.group)
        if self.values.shape != (len(self.classes),):
            raise GroupMismatch("need one character value per conjugacy class")

    @property
    def dim(self):
        return int(round(self.values[0].real))


def character_inner(a: Character, b: Character) -> complex:
    """(1/|G|) sum_g a(g) conj(b(g))."""
    if a.group != b.group:
        raise GroupMismatch("characters live on different groups")
    sizes = np.array([len(c) for c in a.classes])
    return complex(np.sum(sizes * a.values * np.conj(b.values)) / a.group.order)


def hom_dim(a: Character, b: Character, int_tol=INT_TOL) -> int:
    """Dimension of the space of intertwiners between reps with these characters."""
    val = character_inner(a, b)
    n = round(val.real)
    if abs(val - n) > int_tol:
        raise NonIntegralMultiplicity(f"character pairing {val} is not an integer")
    return int(n)


class RepModel:
    """An explicit matrix representation: one invertible matrix per element."""

    def __init__(self, group: FinGroup, matrices, basis_labels=None, check=False):
        matrices = np.asarray(matrices, dtype=complex)
        if matrices.shape[0] != group.order or matrices.ndim != 3:
            raise GroupMismatch("need one square matrix per group element")
        if matrices.shape[1] != matrices.shape[2]:
            raise GroupMismatch("representation matrices must be square")
        self.group = group
        self.matrices = matrices
        self.dim = int(matrices.shape[1])
        self.basis_labels = list(basis_labels) if basis_labels is not None else None
        self._character = None
        if check:
            self.check()

    def check(self, tol=DEFAULT_TOL):
        g = self.group
        if self.dim == 0:
            return
        if np.max(np.abs(self.matrices[0] - np.eye(self.dim))) > tol:
            raise NumericalFailure("identity element does not act as the identity")
        for a in range(g.order):
            for b in range(g.order):
                err = np.max(
                    np.abs(self.matrices[g.mul(a, b)] - self.matrices[a] @ self.matrices[b])
                )
                if err > tol:
                    raise NumericalFailure(f"representation law fails at ({a},{b}): {err}")

    @property
    def character(self) -> Character:
        if self._character is None:
            classes = conjugacy_classes(self.group)
            vals = [
                np.trace(self.matrices[c[0]]) if self.dim else 0.0 for c in classes
            ]
            self._character = Character(self.group, np.array(vals))
        return self._character

    def apply(self, g, vec):
        return self.matrices[g] @ vec


class Irrep(RepModel):
    """A unitary irreducible representation with its character attached."""

    def __init__(self, group, matrices, character):
        super().__init__(group, matrices)
        self._character = character


def trivial_rep(g: FinGroup) -> RepModel:
    return RepModel(g, np.ones((g.order, 1, 1), dtype=complex))


def regular_rep(g: FinGroup) -> RepModel:
    mats = np.zeros((g.order, g.order, g.order), dtype=complex)
    for a in range(g.order):
        mats[a, g.mult[a], np.arange(g.order)] = 1.0
    return RepModel(g, mats)


# ---------------------------------------------------------------------------
# irreducibles by splitting the regular representation

_IRREP_CACHE: dict = {}
_IRREP_LOCK = threading.Lock()


def _subrep(matrices, basis):
    return np.einsum("ni,gnm,mj->gij", basis.conj(), matrices, basis)


def _char_of(matrices, classes):
    return np.array([np.trace(matrices[c[0]]) for c in classes])


def _split(matrices, basis, rng, cluster_tol=1e-6):
    """Split an invariant subspace with a random averaged Hermitian operator."""
    k = basis.shape[1]
    sub = _subrep(matrices, basis)
    a = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
    h = a + a.conj().T
    avg = np.zeros((k, k), dtype=complex)
    for g in range(sub.shape[0]):
        avg += sub[g] @ h @ sub[g].conj().T
    avg /= sub.shape[0]
    evals, vecs = np.linalg.eigh(avg)
    pieces = []
    start = 0
    for i in range(1, k + 1):
        if i == k or evals[i] - evals[i - 1] > cluster_tol:
            block = basis @ vecs[:, start:i]
            block, _ = np.linalg.qr(block)
            pieces.append(block)
            start = i
    return pieces


def irreps(g: FinGroup, seed=DEFAULT_SEED, tol=DEFAULT_TOL, use_cache=True):
    """All irreducible unitary representations of g, in a deterministic order:
    ascending dimension, then lexicographically by character value tuple over
    the conjugacy classes (real parts compared before imaginary parts)."""
    key = (g.fingerprint, seed)
    if use_cache:
        with _IRREP_LOCK:
            cached = _IRREP_CACHE.get(key)
        if cached is not None:
            return cached
    classes = conjugacy_classes(g)
    reg = regular_rep(g).matrices
    rng = np.random.default_rng(seed)
    queue = [np.eye(g.order, dtype=complex)]
    simple = []
    while queue:
        basis = queue.pop(0)
        chi = _char_of(_subrep(reg, basis), classes)
        sizes = np.array([len(c) for c in classes])
        norm = np.sum(sizes * chi * np.conj(chi)).real / g.order
        if abs(norm - round(norm)) > INT_TOL:
            raise NumericalFailure(f"character norm {norm} is not integral")
        if round(norm) == 1:
            simple.append(basis)
            continue
        for attempt in range(40):
            pieces = _split(reg, basis, rng)
            if len(pieces) > 1:
                queue.extend(pieces)
                break
        else:
            raise NumericalFailure("failed to split a reducible invariant subspace")
    # one representative per character
    found = {}
    for basis in simple:
        mats = _subrep(reg, basis)
        chi = _char_of(mats, classes)
        chikey = tuple((round(v.real, 8), round(v.imag, 8)) for v in chi)
        if chikey not in found:
            found[chikey] = Irrep(g, mats, Character(g, chi))
    result = sorted(
        found.values(),
        key=lambda r: (r.dim, tuple((round(v.real, 8), round(v.imag, 8)) for v in r.character.values)),
    )
    if sum(r.dim**2 for r in result) != g.order:
        raise NumericalFailure(
            f"irrep dimensions {[r.dim for r in result]} do not satisfy sum d^2 = |G|"
        )
    for i, r in enumerate(result):
        for j, s in enumerate(result):
            want = 1.0 if i == j else 0.0
            if abs(character_inner(r.character, s.character) - want) > tol:
                raise NumericalFailure("computed characters are not orthonormal")
    if use_cache:
        with _IRREP_LOCK:
            _IRREP_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# restriction and induction along a homomorphism


def restrict_rep(f: GroupHom, r: RepModel) -> RepModel:
    """Pullback along f: element g acts by r(f(g)) on the same space."""
    if r.group != f.target:
        raise GroupMismatch("model lives on the wrong group for this restriction")
    return RepModel(f.source, r.matrices[f.map], basis_labels=r.basis_labels)


class InducedRep(RepModel):
    """Concrete model of C[H] tensor_{C[G]} V along f : G -> H.

    Attributes:
        hom: the homomorphism f.
        base: the G-model V that was induced.
        coset_reps: minimal-index representatives of the left cosets h*im(f).
        coset_index: coset id per element of H.
        section: minimal-index preimage per element of im(f).
        invariant_basis: orthonormal basis (columns) of the ker(f)-invariants.
    """

    def __init__(self, group, matrices, basis_labels, hom, base, coset_reps,
                 coset_index, section, invariant_basis):
        super().__init__(group, matrices, basis_labels)
        self.hom = hom
        self.base = base
        self.coset_reps = coset_reps
        self.coset_index = coset_index
        self.section = section
        self.invariant_basis = invariant_basis

    @property
    def block_dim(self):
        return self.invariant_basis.shape[1]

    def tensor_coords(self, h, vec):
        """Coordinates of the tensor  h (x) vec  (vec in V-coordinates)."""
        out = np.zeros(self.dim, dtype=complex)
        dw = self.block_dim
        if dw == 0:
            return out
        hh = self.group
        i = int(self.coset_index[h])
        u = hh.mul(hh.inv[self.coset_reps[i]], h)
        gu = self.section[u]
        out[i * dw : (i + 1) * dw] = self.invariant_basis.conj().T @ (
            self.base.matrices[gu] @ np.asarray(vec, dtype=complex)
        )
        return out


def _invariant_basis(v: RepModel, kernel, tol=1e-9):
    if v.dim == 0:
        return np.zeros((0, 0), dtype=complex)
    p = np.zeros((v.dim, v.dim), dtype=complex)
    for k in kernel:
        p += v.matrices[k]
    p /= len(kernel)
    u, s, _ = np.linalg.svd(p)
    rank = int(np.sum(s > 0.5))
    del tol
    return u[:, :rank]


def _left_cosets(h: FinGroup, image):
    coset_index = -np.ones(h.order, dtype=np.int64)
    reps = []
    for a in range(h.order):
        if coset_index[a] >= 0:
            continue
        reps.append(a)
        for u in image:
            coset_index[h.mul(a, u)] = len(reps) - 1
    return reps, coset_index


def _right_cosets(h: FinGroup, image):
    coset_index = -np.ones(h.order, dtype=np.int64)
    reps = []
    for a in range(h.order):
        if coset_index[a] >= 0:
            continue
        reps.append(a)
        for u in image:
            coset_index[h.mul(u, a)] = len(reps) - 1
    return reps, coset_index


def induce_rep(f: GroupHom, v: RepModel) -> InducedRep:
    """Induction of v along f, on the basis  h_i (x) e_j  (cosets x invariants)."""
    if v.group != f.source:
        raise GroupMismatch("model lives on the wrong group for this induction")
    h = f.target
    image = f.image()
    section = {}
    for g in range(f.source.order):
        u = f(g)
        if u not in section:
            section[u] = g
    c = _invariant_basis(v, f.kernel())
    dw = c.shape[1]
    reps, coset_index = _left_cosets(h, image)
    n = len(reps)
    dim = n * dw
    mats = np.zeros((h.order, dim, dim), dtype=complex)
    sigma = {u: c.conj().T @ v.matrices[section[u]] @ c for u in image}
    for a in range(h.order):
        for i, hi in enumerate(reps):
            ahi = h.mul(a, hi)
            j = int(coset_index[ahi])
            u = h.mul(h.inv[reps[j]], ahi)
            mats[a, j * dw : (j + 1) * dw, i * dw : (i + 1) * dw] = sigma[u]
    labels = [f"h{hi}⊗e{j}" for hi in reps for j in range(dw)]
    return InducedRep(h, mats, labels, f, v, reps, coset_index, section, c)


def induced_morphism(ind_source: InducedRep, ind_target: InducedRep, phi):
    """Apply the induction functor to an equivariant map between base models.

    Both inductions must be along the same homomorphism; the result is block
    diagonal over the cosets.
    """
    if ind_source.hom != ind_target.hom:
        raise ModelMismatch("inductions along different homomorphisms")
    phi = np.asarray(phi, dtype=complex)
    dws, dwt = ind_source.block_dim, ind_target.block_dim
    n = len(ind_source.coset_reps)
    out = np.zeros((ind_target.dim, ind_source.dim), dtype=complex)
    if dws and dwt:
        block = ind_target.invariant_basis.conj().T @ phi @ ind_source.invariant_basis
        for i in range(n):
            out[i * dwt : (i + 1) * dwt, i * dws : (i + 1) * dws] = block
    return out


def flatten_induction(outer: InducedRep, direct: InducedRep):
    """The canonical iso ind_f(ind_g(V)) -> ind_{f.g}(V) as a matrix.

    ``outer`` must be an induction (along f) of an InducedRep (along g), and
    ``direct`` the induction of the same base along the composite g.then(f).
    """
    inner = outer.base
    if not isinstance(inner, InducedRep):
        raise ModelMismatch("outer induction must sit on an induced model")
    if direct.hom != inner.hom.then(outer.hom):
        raise ModelMismatch("direct induction is not along the composite hom")
    hh = outer.group
    f = outer.hom
    dw_out = outer.block_dim
    dw_in = inner.block_dim
    out = np.zeros((direct.dim, outer.dim), dtype=complex)
    for i, ri in enumerate(outer.coset_reps):
        for j in range(dw_out):
            w = outer.invariant_basis[:, j]  # a ker(f)-invariant vector of ind_g V
            col = np.zeros(direct.dim, dtype=complex)
            for q, rq in enumerate(inner.coset_reps):
                for l in range(dw_in):
                    coeff = w[q * dw_in + l]
                    if abs(coeff) < 1e-15:
                        continue
                    elt = hh.mul(ri, f(rq))
                    base_vec = inner.invariant_basis[:, l]
                    col += coeff * direct.tensor_coords(elt, base_vec)
            out[:, i * dw_out + j] = col
    return out


# ---------------------------------------------------------------------------
# intertwiners


def intertwiner_basis(r1: RepModel, r2: RepModel, tol=DEFAULT_TOL):
    """Orthonormal basis (Frobenius norm) of {f : f r1(g) = r2(g) f for all g},
    via the averaged projection of matrix units; the count is checked against
    the character prediction."""
    if r1.group != r2.group:
        raise GroupMismatch("intertwiners need both models on one group")
    g = r1.group
    d1, d2 = r1.dim, r2.dim
    expected = hom_dim(r1.character, r2.character)
    if d1 == 0 or d2 == 0:
        if expected:
            raise RankMismatch("positive character count on a zero-dimensional space")
        return []
    s = np.zeros((d2 * d1, d2 * d1), dtype=complex)
    for a in range(g.order):
        s += np.kron(r2.matrices[g.inv[a]], r1.matrices[a].T)
    s /= g.order
    u, sv, _ = np.linalg.svd(s)
    cutoff = 1e-9 * max(1.0, sv[0] if len(sv) else 1.0)
    rank = int(np.sum(sv > cutoff))
    if rank != expected:
        raise RankMismatch(
            f"projector rank {rank} disagrees with character count {expected}"
        )
    basis = [LinearMap(u[:, k].reshape(d2, d1)) for k in range(rank)]
    for b in basis:
        worst = max(
            np.max(np.abs(b.entries @ r1.matrices[a] - r2.matrices[a] @ b.entries))
            for a in range(g.order)
        )
        if worst > 1e-7:
            raise RankMismatch(f"projected basis element fails equivariance: {worst}")
    return basis


# ---------------------------------------------------------------------------
# hom model, Nakayama map, units and counits


def _hom_model_reps(f: GroupHom):
    """Right-coset representatives indexing the distinguished basis of
    Hom_{C[G]}(C[H], V): pairs (right coset rep, invariant basis vector) with
    phi_{i,j}(f(g) r_i) = g . (C e_j), zero off the coset im(f) r_i."""
    rreps, _ = _right_cosets(f.target, f.image())
    return rreps


def nakayama(f: GroupHom, v: RepModel, tol=DEFAULT_TOL) -> LinearMap:
    """Matrix of the exterior trace map from the hom model of induction to the
    tensor model, in the distinguished bases; raises SingularMap if it is not
    invertible.  The returned map carries a ``condition_number`` attribute."""
    mat, _, _ = _nakayama_data(f, v)
    if mat.shape[0] != mat.shape[1]:
        raise SingularMap("hom and tensor models have different dimensions")
    cond = 1.0
    if mat.shape[0]:
        sv = np.linalg.svd(mat, compute_uv=False)
        if sv[-1] <= tol * max(1.0, sv[0]):
            raise SingularMap("exterior trace map is numerically singular")
        cond = float(sv[0] / sv[-1])
    out = LinearMap(mat)
    out.condition_number = cond
    return out


def _nakayama_data(f: GroupHom, v: RepModel):
    """(matrix, ind model, right-coset reps) of the exterior trace map
    phi -> (1/#G) sum_{h in H} h^-1 (x) phi(h)."""
    ind = induce_rep(f, v)
    h = f.target
    c = ind.invariant_basis
    dw = c.shape[1]
    rreps = _hom_model_reps(f)
    nhom = len(rreps) * dw
    mat = np.zeros((ind.dim, nhom), dtype=complex)
    image = f.image()
    for i, ri in enumerate(rreps):
        for j in range(dw):
            col = np.zeros(ind.dim, dtype=complex)
            for u in image:
                hh = h.mul(u, ri)  # runs over the right coset im(f) * ri once
                g = ind.section[u]
                val = v.matrices[g] @ c[:, j]
                col += ind.tensor_coords(h.inv[hh], val)
            mat[:, i * dw + j] = col
    mat /= f.source.order
    return mat, ind, rreps


def eta_L(f: GroupHom, fmodel: RepModel) -> LinearMap:
    """Unit of the adjunction with induction on the right:  v -> 1 (x) v."""
    if fmodel.group != f.source:
        raise ModelMismatch("eta_L needs a model of the source group")
    ind = induce_rep(f, fmodel)
    out = np.zeros((ind.dim, fmodel.dim), dtype=complex)
    dw = ind.block_dim
    if dw:
        out[0:dw, :] = ind.invariant_basis.conj().T
    return LinearMap(out)


def eps_L(f: GroupHom, gmodel: RepModel) -> LinearMap:
    """Counit of the same adjunction: sum of multiplication maps
    h (x) v -> h . v on the induced model of the restriction."""
    if gmodel.group != f.target:
        raise ModelMismatch("eps_L needs a model of the target group")
    ind = induce_rep(f, restrict_rep(f, gmodel))
    out = np.zeros((gmodel.dim, ind.dim), dtype=complex)
    dw = ind.block_dim
    c = ind.invariant_basis
    for i, hi in enumerate(ind.coset_reps):
        if dw:
            out[:, i * dw : (i + 1) * dw] = gmodel.matrices[hi] @ c
    return LinearMap(out)


def eta_R(f: GroupHom, gmodel: RepModel) -> LinearMap:
    """Unit of the adjunction with induction on the left:
    v -> (1/#G) sum_{h in H} h^-1 (x) h.v."""
    if gmodel.group != f.target:
        raise ModelMismatch("eta_R needs a model of the target group")
    ind = induce_rep(f, restrict_rep(f, gmodel))
    h = f.target
    out = np.zeros((ind.dim, gmodel.dim), dtype=complex)
    for col in range(gmodel.dim):
        e = np.zeros(gmodel.dim, dtype=complex)
        e[col] = 1.0
        acc = np.zeros(ind.dim, dtype=complex)
        for a in range(h.order):
            acc += ind.tensor_coords(h.inv[a], gmodel.matrices[a] @ e)
        out[:, col] = acc / f.source.order
    return LinearMap(out)


def eps_R(f: GroupHom, fmodel: RepModel, tol=DEFAULT_TOL) -> LinearMap:
    """Counit of the same adjunction: evaluation at the identity composed with
    the inverse of the exterior trace map."""
    if fmodel.group != f.source:
        raise ModelMismatch("eps_R needs a model of the source group")
    mat, ind, rreps = _nakayama_data(f, fmodel)
    if mat.shape[0] != mat.shape[1]:
        raise SingularMap("hom and tensor models have different dimensions")
    dw = ind.block_dim
    ev = np.zeros((fmodel.dim, mat.shape[1]), dtype=complex)
    if dw:
        # only the right coset of the identity contributes to phi(1); its
        # representative is the identity, stored first
        ev[:, 0:dw] = ind.invariant_basis
    if mat.shape[0]:
        sv = np.linalg.svd(mat, compute_uv=False)
        if sv[-1] <= tol * max(1.0, sv[0]):
            raise SingularMap("exterior trace map is numerically singular")
        inv = np.linalg.inv(mat)
    else:
        inv = mat
    return LinearMap(ev @ inv)


@dataclass
class ZigzagReport:
    hom: GroupHom
    deviations: dict = field(default_factory=dict)

    @property
    def max_deviation(self):
        return max(self.deviations.values(), default=0.0)

    def ok(self, tol=DEFAULT_TOL):
        return self.max_deviation < tol


def verify_zigzag(f: GroupHom, probes) -> ZigzagReport:
    """Evaluate the four triangle identities of the two adjunctions on each
    probe representation and report the worst deviation from the identity."""
    report = ZigzagReport(f)
    for idx, probe in enumerate(probes):
        if probe.group == f.source:
            ind = induce_rep(f, probe)
            ind2 = induce_rep(f, restrict_rep(f, ind))
            # (eps_L . Id) o (Id . eta_L) = Id on the induced model
            push_eta = induced_morphism(ind, ind2, eta_L(f, probe).entries)
            comp1 = eps_L(f, ind).entries @ push_eta
            report.deviations[(idx, "left_push")] = _dev_from_eye(comp1)
            # (Id . eps_R) o (eta_R . Id) = Id on the induced model
            push_eps = induced_morphism(ind2, ind, eps_R(f, probe).entries)
            comp4 = push_eps @ eta_R(f, ind).entries
            report.deviations[(idx, "right_push")] = _dev_from_eye(comp4)
        elif probe.group == f.target:
            res = restrict_rep(f, probe)
            # (Id . eps_L) o (eta_L . Id) = Id on the restricted model
            comp2 = eps_L(f, probe).entries @ eta_L(f, res).entries
            report.deviations[(idx, "left_pull")] = _dev_from_eye(comp2)
            # (eps_R . Id) o (Id . eta_R) = Id on the restricted model
            comp3 = eps_R(f, res).entries @ eta_R(f, probe).entries
            report.deviations[(idx, "right_pull")] = _dev_from_eye(comp3)
        else:
            raise ModelMismatch("probe representation does not match either group")
    return report


def _dev_from_eye(mat):
    n = mat.shape[0]
    if n != mat.shape[1]:
        return float("inf")
    if n == 0:
        return 0.0
    return float(np.max(np.abs(mat - np.eye(n))))
