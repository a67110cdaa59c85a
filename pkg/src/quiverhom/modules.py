"""Finitely generated modules over a BasedAlgebra as block-structured
representations, with morphisms, duality, Hom spaces, structural series,
Krull-Schmidt decomposition, and endomorphism algebras.

A representation stores one total-dimension action matrix per algebra
generator; idempotents act as coordinate-block projections. Every module
map is block-diagonal, so kernels, images and cokernels decompose blockwise
and stay exact.
"""

from __future__ import annotations

import numpy as np
from sympy import GF, Poly, symbols

from . import linalg
from .algebra import BasedAlgebra
from .errors import PreconditionError

_X = symbols("x")


class AlgebraMismatch(ValueError):
    """Operands live over different algebras."""


class Representation:
    """Module over a BasedAlgebra, given blockwise.

    dims[i] is the dimension of the e_i block; coordinates are laid out
    block-contiguously. gen_action[j] is the (total x total) matrix of the
    j-th algebra generator, supported in block (tgt_j, src_j).
    """

    def __init__(self, algebra: BasedAlgebra, dims, gen_action,
                 name: str = "", check: bool = False):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != algebra.nblocks:
            raise ValueError("dimension vector has wrong length")
        self.total = sum(self.dims)
        self.offsets = np.concatenate([[0], np.cumsum(self.dims)])
        p = algebra.field.p
        self.gen_action = [np.ascontiguousarray(
            np.asarray(g, dtype=np.int64) % p) for g in gen_action]
        if len(self.gen_action) != len(algebra.gens):
            raise ValueError("one action matrix per generator required")
        self.name = name
        self._cache: dict = {}
        if check:
            self.check_block_support()

    # -- coordinates ---------------------------------------------------------

    def block_slice(self, i: int) -> slice:
        return slice(int(self.offsets[i]), int(self.offsets[i + 1]))

    def block_of_coord(self, c: int) -> int:
        return int(np.searchsorted(self.offsets, c, side="right") - 1)

    def block_projection(self, i: int) -> np.ndarray:
        m = np.zeros((self.total, self.total), dtype=np.int64)
        s = self.block_slice(i)
        m[s, s] = np.eye(self.dims[i], dtype=np.int64)
        return m

    def check_block_support(self):
        for g, mat in zip(self.algebra.gens, self.gen_action):
            if mat.shape != (self.total, self.total):
                raise ValueError("action matrix has wrong shape")
            outside = mat.copy()
            outside[self.block_slice(g.tgt), self.block_slice(g.src)] = 0
            if outside.any():
                raise ValueError(
                    f"action of generator {g.label} leaves its block")

    @property
    def is_zero(self) -> bool:
        return self.total == 0

    def token_action(self, token) -> np.ndarray:
        kind, idx = token
        if kind == "e":
            return self.block_projection(idx)
        return self.gen_action[idx]

    def word_action_matrices(self) -> np.ndarray:
        """(nwords, total, total) action matrices of the algebra's word table."""
        p = self.algebra.field.p
        cache: dict[tuple, np.ndarray] = {}
        mats = []
        for w in self.algebra._words:
            if w in cache:
                mats.append(cache[w])
                continue
            prefix = w[:-1]
            base = cache[prefix] if prefix in cache else (
                np.eye(self.total, dtype=np.int64) if not prefix
                else None)
            if base is None:
                base = np.eye(self.total, dtype=np.int64)
                for t in prefix:
                    base = linalg.matmul(base, self.token_action(t), p)
                cache[prefix] = base
            mat = linalg.matmul(base, self.token_action(w[-1]), p)
            cache[w] = mat
            mats.append(mat)
        return np.array(mats) if mats else np.zeros(
            (0, self.total, self.total), dtype=np.int64)

    def basis_action_tensor(self) -> np.ndarray:
        """(algebra.dim, total, total): action of every algebra basis element.

        Recomputed on demand; not cached (can be large)."""
        mats = self.word_action_matrices()
        p = self.algebra.field.p
        return np.einsum("kw,wab->kab", self.algebra._expansion, mats) % p

    def act(self, vec) -> np.ndarray:
        """Action matrix of an arbitrary algebra element."""
        p = self.algebra.field.p
        tensor = self.basis_action_tensor()
        return np.einsum("k,kab->ab", np.asarray(vec) % p, tensor) % p

    def dim_vector(self) -> tuple[int, ...]:
        return self.dims

    def __repr__(self):
        tag = self.name or "Rep"
        return f"{tag}{list(self.dims)}"


class ModuleMap:
    """Morphism of representations: a block-diagonal total matrix."""

    def __init__(self, source: Representation, target: Representation, mat,
                 check: bool = False):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("source and target over different algebras")
        self.source = source
        self.target = target
        p = source.algebra.field.p
        self.mat = np.ascontiguousarray(
            np.asarray(mat, dtype=np.int64).reshape(
                target.total, source.total) % p)
        if check:
            self.check_intertwines()

    @classmethod
    def zero(cls, source, target) -> "ModuleMap":
        return cls(source, target,
                   np.zeros((target.total, source.total), dtype=np.int64))

    @classmethod
    def identity(cls, m: Representation) -> "ModuleMap":
        return cls(m, m, np.eye(m.total, dtype=np.int64))

    def check_intertwines(self):
        p = self.source.algebra.field.p
        for i in range(self.source.algebra.nblocks):
            s = self.mat.copy()
            s[self.target.block_slice(i), self.source.block_slice(i)] = 0
            if s.any():
                raise ValueError("map does not respect blocks")
        for gs, gt in zip(self.source.gen_action, self.target.gen_action):
            if (linalg.matmul(self.mat, gs, p)
                    != linalg.matmul(gt, self.mat, p)).any():
                raise ValueError("map does not intertwine generator actions")

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self ∘ other."""
        if other.target is not self.source:
            raise AlgebraMismatch("composition mismatch")
        p = self.source.algebra.field.p
        return ModuleMap(other.source, self.target,
                         linalg.matmul(self.mat, other.mat, p))

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        p = self.source.algebra.field.p
        return ModuleMap(self.source, self.target,
                         (self.mat + other.mat) % p)

    def scale(self, c: int) -> "ModuleMap":
        p = self.source.algebra.field.p
        return ModuleMap(self.source, self.target, (self.mat * c) % p)

    @property
    def rank(self) -> int:
        return linalg.rank(self.mat, self.source.algebra.field.p)

    @property
    def is_mono(self) -> bool:
        return self.rank == self.source.total

    @property
    def is_epi(self) -> bool:
        return self.rank == self.target.total

    @property
    def is_iso(self) -> bool:
        return (self.source.total == self.target.total
                and self.rank == self.source.total)

    def kernel(self) -> tuple[Representation, "ModuleMap"]:
        p = self.source.algebra.field.p
        rows = linalg.kernel(self.mat, p)
        return sub_rep(self.source, rows, name=f"ker({self.source.name})")

    def image(self) -> tuple[Representation, "ModuleMap"]:
        """Image as a submodule of the target, with its inclusion."""
        p = self.source.algebra.field.p
        rows = linalg.row_space(self.mat.T, p)
        return sub_rep(self.target, rows, name="im")

    def cokernel(self) -> tuple[Representation, "ModuleMap"]:
        p = self.source.algebra.field.p
        rows = linalg.row_space(self.mat.T, p)
        return quot_rep(self.target, rows, name="coker")

    def corestriction(self) -> tuple[Representation, "ModuleMap", "ModuleMap"]:
        """(image, source ->> image, image inclusion)."""
        img, incl = self.image()
        p = self.source.algebra.field.p
        onto = linalg.solve_matrix(incl.mat, self.mat, p)
        assert onto is not None
        return img, ModuleMap(self.source, img, onto), incl

    def __repr__(self):
        return f"ModuleMap({self.source!r} -> {self.target!r})"


# -- sub/quotient constructions ------------------------------------------


def _block_dims_of_rows(m: Representation, rows: np.ndarray) -> list[int]:
    _, rk, pivots = linalg.rref(rows, m.algebra.field.p)
    dims = [0] * m.algebra.nblocks
    for c in pivots:
        dims[m.block_of_coord(c)] += 1
    return dims


def _as_rows(rows, width: int) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    return rows.reshape(-1, width)


def sub_rep(m: Representation, rows, name: str = "sub"):
    """Submodule spanned by `rows` (must be action-invariant).

    Returns (representation, inclusion map)."""
    p = m.algebra.field.p
    rows = linalg.row_space(_as_rows(rows, m.total), p)
    dims = _block_dims_of_rows(m, rows)
    incl = rows.T  # total x k
    actions = []
    for gmat in m.gen_action:
        rhs = linalg.matmul(gmat, incl, p)
        x = linalg.solve_matrix(incl, rhs, p)
        if x is None:
            raise ValueError("rows do not span an invariant subspace")
        actions.append(x)
    sub = Representation(m.algebra, dims, actions, name=name)
    return sub, ModuleMap(sub, m, incl)


def quot_rep(m: Representation, rows, name: str = "quot"):
    """Quotient by the submodule spanned by `rows`.

    Returns (representation, projection map)."""
    p = m.algebra.field.p
    rows = linalg.row_space(_as_rows(rows, m.total), p)
    proj, section = linalg.quotient_projection(rows, m.total, p)
    killed = _block_dims_of_rows(m, rows)
    dims = [m.dims[i] - killed[i] for i in range(m.algebra.nblocks)]
    actions = [linalg.matmul(linalg.matmul(proj, g, p), section, p)
               for g in m.gen_action]
    quot = Representation(m.algebra, dims, actions, name=name)
    return quot, ModuleMap(m, quot, proj)


def zero_rep(a: BasedAlgebra) -> Representation:
    z = np.zeros((0, 0), dtype=np.int64)
    return Representation(a, [0] * a.nblocks, [z] * len(a.gens), name="0")


def direct_sum(reps: list[Representation], name: str = ""):
    """Block-interleaved direct sum.

    Returns (sum, injections, projections)."""
    if not reps:
        raise ValueError("empty direct sum; use zero_rep")
    a = reps[0].algebra
    for r in reps:
        if r.algebra is not a:
            raise AlgebraMismatch("summands over different algebras")
    dims = [sum(r.dims[i] for r in reps) for i in range(a.nblocks)]
    total = sum(dims)
    offsets = np.concatenate([[0], np.cumsum(dims)])
    inj_mats = [np.zeros((total, r.total), dtype=np.int64) for r in reps]
    pos = [int(offsets[i]) for i in range(a.nblocks)]
    for ri, r in enumerate(reps):
        for i in range(a.nblocks):
            d = r.dims[i]
            if d:
                rs = slice(pos[i], pos[i] + d)
                inj_mats[ri][rs, r.block_slice(i)] = np.eye(d, dtype=np.int64)
                pos[i] += d
    proj_mats = [im.T for im in inj_mats]
    p = a.field.p
    actions = []
    for j in range(len(a.gens)):
        acc = np.zeros((total, total), dtype=np.int64)
        for ri, r in enumerate(reps):
            acc += linalg.matmul(
                linalg.matmul(inj_mats[ri], r.gen_action[j], p),
                proj_mats[ri], p)
        actions.append(acc % p)
    label = name or "+".join(r.name or "?" for r in reps)
    s = Representation(a, dims, actions, name=label)
    injs = [ModuleMap(r, s, im) for r, im in zip(reps, inj_mats)]
    projs = [ModuleMap(s, r, pm) for r, pm in zip(reps, proj_mats)]
    return s, injs, projs


# -- standard modules ------------------------------------------------------


def regular_rep(a: BasedAlgebra) -> Representation:
    """The left regular module, coordinates grouped by target block."""
    if "regular" in a._cache:
        return a._cache["regular"]
    order = sorted(range(a.dim), key=lambda k: (int(a.tgt[k]), k))
    dims = [0] * a.nblocks
    for k in order:
        dims[int(a.tgt[k])] += 1
    actions = []
    for g in a.gens:
        lm = a.left_mult_matrix(g.vec)
        actions.append(lm[np.ix_(order, order)])
    rep = Representation(a, dims, actions, name="A")
    rep._cache["coord_basis_indices"] = order
    a._cache["regular"] = rep
    return rep


def projective(a: BasedAlgebra, i: int) -> Representation:
    """P(i) = A·e_i with the left regular action."""
    key = ("proj", i)
    if key in a._cache:
        return a._cache[key]
    order = sorted((k for k in range(a.dim) if int(a.src[k]) == i),
                   key=lambda k: (int(a.tgt[k]), k))
    dims = [0] * a.nblocks
    for k in order:
        dims[int(a.tgt[k])] += 1
    actions = [a.left_mult_matrix(g.vec)[np.ix_(order, order)] for g in a.gens]
    rep = Representation(a, dims, actions, name=f"P({a.block_labels[i]})")
    rep._cache["coord_basis_indices"] = order
    rep._cache["proj_vertex"] = i
    a._cache[key] = rep
    return rep


def dual(m: Representation) -> Representation:
    """Vector-space dual over the opposite algebra (transposed actions).

    Cached and involutive: dual(dual(m)) is m itself."""
    if "dual" in m._cache:
        return m._cache["dual"]
    op = m.algebra.opposite()
    rep = Representation(op, m.dims, [g.T for g in m.gen_action],
                         name=f"D({m.name})" if m.name else "D")
    rep._cache["dual"] = m
    m._cache["dual"] = rep
    return rep


def injective(a: BasedAlgebra, i: int) -> Representation:
    """I(i) = D(e_i A), computed through the opposite algebra."""
    key = ("inj", i)
    if key in a._cache:
        return a._cache[key]
    rep = dual(projective(a.opposite(), i))
    rep.name = f"I({a.block_labels[i]})"
    a._cache[key] = rep
    return rep


def simple(a: BasedAlgebra, i: int) -> Representation:
    """S(i) = top of P(i)."""
    key = ("simple", i)
    if key in a._cache:
        return a._cache[key]
    pi = projective(a, i)
    rad_rows = radical_rows(pi)
    rep, _ = quot_rep(pi, rad_rows, name=f"S({a.block_labels[i]})")
    a._cache[key] = rep
    return rep


def standard_modules(a: BasedAlgebra, i: int, kind: str) -> Representation:
    if kind == "projective":
        return projective(a, i)
    if kind == "injective":
        return injective(a, i)
    if kind == "simple":
        return simple(a, i)
    raise ValueError(f"unknown kind {kind!r}")


# -- structural series -----------------------------------------------------


def _invariant_closure(m: Representation, rows: np.ndarray) -> np.ndarray:
    p = m.algebra.field.p
    span = linalg.row_space(rows, p)
    tokens = [m.block_projection(i) for i in range(m.algebra.nblocks)]
    tokens += list(m.gen_action)
    while True:
        stacked = [span]
        for t in tokens:
            stacked.append(linalg.matmul(span, t.T, p))
        bigger = linalg.row_space(np.vstack(stacked), p)
        if bigger.shape[0] == span.shape[0]:
            return span
        span = bigger


def radical_rows(m: Representation) -> np.ndarray:
    """Row basis of rad M = J·M."""
    if "radical_rows" in m._cache:
        return m._cache["radical_rows"]
    p = m.algebra.field.p
    if m.total == 0 or not m.gen_action:
        rows = np.zeros((0, m.total), dtype=np.int64)
    else:
        gen_images = [linalg.row_space(g.T, p) for g in m.gen_action]
        seed = np.vstack([r for r in gen_images if r.shape[0]]) if any(
            r.shape[0] for r in gen_images) else np.zeros((0, m.total),
                                                          dtype=np.int64)
        rows = _invariant_closure(m, seed) if seed.shape[0] else seed
    m._cache["radical_rows"] = rows
    return rows


def socle_rows(m: Representation) -> np.ndarray:
    """Row basis of soc M = annihilator of J (dual of top of the dual)."""
    if "socle_rows" in m._cache:
        return m._cache["socle_rows"]
    p = m.algebra.field.p
    dual_rad = radical_rows(dual(m))
    rows = linalg.kernel(dual_rad, p) if dual_rad.shape[0] else np.eye(
        m.total, dtype=np.int64)
    rows = linalg.row_space(rows, p)
    m._cache["socle_rows"] = rows
    return rows


def series(m: Representation):
    """(top, radical submodule, socle submodule) with their canonical maps."""
    rad_rows = radical_rows(m)
    top, top_proj = quot_rep(m, rad_rows, name=f"top({m.name})")
    rad, rad_incl = sub_rep(m, rad_rows, name=f"rad({m.name})")
    soc, soc_incl = sub_rep(m, socle_rows(m), name=f"soc({m.name})")
    return (top, top_proj), (rad, rad_incl), (soc, soc_incl)


# -- Hom spaces ------------------------------------------------------------


def hom_basis(m: Representation, n: Representation) -> list[ModuleMap]:
    """Basis of Hom(m, n): the solution space of the intertwining system."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("hom between modules over different algebras")
    a = m.algebra
    p = a.field.p
    nv = [n.dims[i] * m.dims[i] for i in range(a.nblocks)]
    nvars = sum(nv)
    if nvars == 0:
        return []
    var_off = np.concatenate([[0], np.cumsum(nv)])
    rows = []
    for g, gm, gn in zip(a.gens, m.gen_action, n.gen_action):
        s, t = g.src, g.tgt
        if m.dims[s] == 0 or n.dims[t] == 0:
            continue
        A = gm[m.block_slice(t), m.block_slice(s)]
        B = gn[n.block_slice(t), n.block_slice(s)]
        # f_t @ A - B @ f_s = 0, row-major vec
        blk = np.zeros((n.dims[t] * m.dims[s], nvars), dtype=np.int64)
        if m.dims[t]:
            blk[:, var_off[t]:var_off[t + 1]] += np.kron(
                np.eye(n.dims[t], dtype=np.int64), A.T)
        if n.dims[s]:
            blk[:, var_off[s]:var_off[s + 1]] -= np.kron(
                B, np.eye(m.dims[s], dtype=np.int64))
        rows.append(blk % p)
    system = np.vstack(rows) if rows else np.zeros((0, nvars), dtype=np.int64)
    ker = linalg.kernel(system, p)
    out = []
    for v in ker:
        mat = np.zeros((n.total, m.total), dtype=np.int64)
        for i in range(a.nblocks):
            if nv[i]:
                mat[n.block_slice(i), m.block_slice(i)] = v[
                    var_off[i]:var_off[i + 1]].reshape(n.dims[i], m.dims[i])
        out.append(ModuleMap(m, n, mat))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


def stable_hom_dims(m: Representation, n: Representation) -> tuple[int, int]:
    """(dim Hom mod maps through injectives, dim Hom mod maps through
    projectives)."""
    from .homology import injective_envelope, projective_cover

    p = m.algebra.field.p
    homs = hom_basis(m, n)
    h = len(homs)
    if h == 0:
        return 0, 0
    hom_mat = np.array([f.mat.reshape(-1) for f in homs])

    env = injective_envelope(m)  # m -> E(m)
    through_inj = [g.compose(env).mat.reshape(-1)
                   for g in hom_basis(env.target, n)]
    dim_inj = linalg.rank(np.array(through_inj), p) if through_inj else 0

    cov = projective_cover(n)  # P(n) ->> n
    through_proj = [cov.compose(g).mat.reshape(-1)
                    for g in hom_basis(m, cov.source)]
    dim_proj = linalg.rank(np.array(through_proj), p) if through_proj else 0
    return h - dim_inj, h - dim_proj


# -- endomorphism ring machinery -------------------------------------------


class _FiniteAlgebra:
    """Raw associative algebra on a list of matrices (an End ring)."""

    def __init__(self, mats: list[np.ndarray], p: int):
        self.p = p
        self.mats = mats
        self.dim = len(mats)
        flat = np.array([mm.reshape(-1) for mm in mats])
        self.flat = flat
        self.mult = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        prods = np.array([
            linalg.matmul(mats[i], mats[j], p).reshape(-1)
            for i in range(self.dim) for j in range(self.dim)
        ]) if self.dim else np.zeros((0, flat.shape[1] if self.dim else 0),
                                     dtype=np.int64)
        if self.dim:
            coeffs = linalg.solve_matrix(flat.T, prods.T, p)
            assert coeffs is not None, "End basis not closed under product"
            self.mult = coeffs.T.reshape(self.dim, self.dim, self.dim)

    def coords(self, mat: np.ndarray):
        x = linalg.solve(self.flat.T, mat.reshape(-1), self.p)
        return x

    def radical_rows(self) -> np.ndarray:
        if self.p <= self.dim:
            raise PreconditionError(
                f"field too small for the trace-form radical of an "
                f"endomorphism ring (p={self.p}, dim={self.dim})")
        t = np.einsum("kjj->k", self.mult) % self.p
        tform = np.einsum("ijk,k->ji", self.mult, t) % self.p
        return linalg.kernel(tform, self.p)

    def multiply(self, x, y):
        return np.einsum("i,j,ijk->k", x % self.p, y % self.p,
                         self.mult) % self.p


def end_algebra(m: Representation) -> tuple[list[ModuleMap], _FiniteAlgebra]:
    if "end" not in m._cache:
        basis = hom_basis(m, m)
        m._cache["end"] = (basis, _FiniteAlgebra(
            [f.mat for f in basis], m.algebra.field.p))
    return m._cache["end"]


def _end_radical_rows(m: Representation) -> np.ndarray:
    if "end_radical" not in m._cache:
        _, ealg = end_algebra(m)
        m._cache["end_radical"] = ealg.radical_rows()
    return m._cache["end_radical"]


def _minimal_polynomial(mat: np.ndarray, p: int) -> list[int]:
    """Coefficients (low degree first) of the minimal polynomial, monic."""
    n = mat.shape[0]
    if n == 0:
        return [0, 1]
    power = np.eye(n, dtype=np.int64)
    stack = [power.reshape(-1)]
    for _ in range(n + 1):
        power = linalg.matmul(power, mat, p)
        prev = np.array(stack)
        coeffs = linalg.solve(prev.T, power.reshape(-1), p)
        if coeffs is not None:
            cs = [int(-c % p) for c in coeffs] + [1]
            return cs
        stack.append(power.reshape(-1))
    raise RuntimeError("minimal polynomial search failed")


def _poly_factors(coeffs: list[int], p: int):
    """Irreducible factors (as coefficient lists, low degree first) with
    multiplicities, over GF(p)."""
    poly = Poly(list(reversed(coeffs)), _X, domain=GF(p))
    _, factors = poly.factor_list()
    out = []
    for fac, mult in factors:
        cs = [int(c) % p for c in reversed(fac.all_coeffs())]
        out.append((cs, int(mult)))
    return out


def _eval_poly_at_matrix(coeffs, mat, p):
    n = mat.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    power = np.eye(n, dtype=np.int64)
    for c in coeffs:
        if c:
            acc = (acc + c * power) % p
        power = linalg.matmul(power, mat, p)
    return acc


def _mat_power(mat, e, p):
    n = mat.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = mat.copy()
    while e > 0:
        if e & 1:
            result = linalg.matmul(result, base, p)
        base = linalg.matmul(base, base, p)
        e >>= 1
    return result


def _try_split(m: Representation, fmat: np.ndarray):
    """Fitting-style splitting along an endomorphism, via its minimal
    polynomial. Returns (sub1, sub2) or None."""
    p = m.algebra.field.p
    minpoly = _minimal_polynomial(fmat, p)
    factors = _poly_factors(minpoly, p)
    if len(factors) < 2:
        return None
    q1 = factors[0][0]
    h = _mat_power(_eval_poly_at_matrix(q1, fmat, p), m.total, p)
    ker_rows = linalg.kernel(h, p)
    if ker_rows.shape[0] in (0, m.total):
        return None
    im_rows = linalg.row_space(h.T, p)
    k_rep, _ = sub_rep(m, ker_rows, name="")
    i_rep, _ = sub_rep(m, im_rows, name="")
    assert k_rep.total + i_rep.total == m.total
    return k_rep, i_rep


def _certify_indecomposable(m: Representation) -> bool:
    """End(m)/rad is a finite field: commutative with one-dimensional
    Frobenius-fixed subalgebra."""
    basis, ealg = end_algebra(m)
    p = ealg.p
    jrows = _end_radical_rows(m)
    red, jrk, pivots = linalg.rref(jrows, p)
    quot_dim = ealg.dim - jrk
    if quot_dim == 1:
        return True
    proj, section = linalg.quotient_projection(jrows, ealg.dim, p)
    # induced multiplication on E/J
    qmult = np.zeros((quot_dim, quot_dim, quot_dim), dtype=np.int64)
    for i in range(quot_dim):
        for j in range(quot_dim):
            prod = ealg.multiply(section[:, i], section[:, j])
            qmult[i, j] = proj @ prod % p
    comm = (qmult != np.swapaxes(qmult, 0, 1)).any()
    if comm:
        return False
    # Frobenius x -> x^p is GF(p)-linear on a commutative algebra; the
    # quotient is a field iff its fixed space is one-dimensional.
    def qmul(x, y):
        return np.einsum("i,j,ijk->k", x, y, qmult) % p

    def qpow(x, e):
        result = None
        power = x
        while e > 0:
            if e & 1:
                result = power if result is None else qmul(result, power)
            power = qmul(power, power)
            e >>= 1
        return result

    eye_q = np.eye(quot_dim, dtype=np.int64)
    frob = np.array([qpow(eye_q[i], p) for i in range(quot_dim)]).T % p
    fixed = linalg.kernel((frob - np.eye(quot_dim, dtype=np.int64)) % p, p)
    return fixed.shape[0] == 1


def _split_completely(m: Representation) -> list[Representation]:
    if m.total == 0:
        return []
    if m.algebra.field.p <= len(end_algebra(m)[0]):
        raise PreconditionError(
            "field too small to certify a Krull-Schmidt decomposition")
    if _certify_indecomposable(m):
        return [m]
    basis, _ = end_algebra(m)
    candidates = [f.mat for f in basis]
    nb = len(basis)
    for i in range(nb):
        for j in range(i + 1, nb):
            candidates.append((basis[i].mat + basis[j].mat)
                              % m.algebra.field.p)
    for fmat in candidates:
        split = _try_split(m, fmat)
        if split is not None:
            k, im = split
            return _split_completely(k) + _split_completely(im)
    raise RuntimeError(
        "module is decomposable but no splitting endomorphism was found")


def decompose(m: Representation) -> list[tuple[Representation, int]]:
    """Krull-Schmidt decomposition into (indecomposable, multiplicity)."""
    if "decompose" in m._cache:
        return m._cache["decompose"]
    factors = _split_completely(m)
    grouped: list[tuple[Representation, int]] = []
    for f in factors:
        f._cache["indecomposable"] = True
        for idx, (g, c) in enumerate(grouped):
            if _indec_isomorphic(f, g):
                grouped[idx] = (g, c + 1)
                break
        else:
            grouped.append((f, 1))
    m._cache["decompose"] = grouped
    return grouped


def _indec_isomorphic(m: Representation, n: Representation) -> bool:
    if m.dims != n.dims:
        return False
    if m is n:
        return True
    p = m.algebra.field.p
    h1 = hom_basis(m, n)
    h2 = hom_basis(n, m)
    if not h1 or not h2:
        return False
    _, ealg = end_algebra(m)
    jrows = _end_radical_rows(m)
    for f in h1:
        for g in h2:
            comp = linalg.matmul(g.mat, f.mat, p)
            coords = ealg.coords(comp)
            assert coords is not None
            if coords.any() and not linalg.in_row_space(jrows, coords, p):
                return True
    return False


def is_isomorphic(m: Representation, n: Representation) -> bool:
    """Deterministic isomorphism test (multisets of indecomposable factors)."""
    if m.algebra is not n.algebra:
        raise AlgebraMismatch("modules over different algebras")
    if m.dims != n.dims:
        return False
    if m.total == 0:
        return True
    if m is n:
        return True
    if m._cache.get("indecomposable") and n._cache.get("indecomposable"):
        return _indec_isomorphic(m, n)
    dm = decompose(m)
    dn = list(decompose(n))
    if sum(c for _, c in dm) != sum(c for _, c in dn):
        return False
    for x, cx in dm:
        for idx, (y, cy) in enumerate(dn):
            if cx == cy and _indec_isomorphic(x, y):
                dn.pop(idx)
                break
        else:
            return False
    return not dn


def is_summand(x: Representation, m: Representation) -> bool:
    """x (indecomposable or not) is a direct summand of m."""
    dm = decompose(m)
    for y, cy in decompose(x):
        found = False
        for z, cz in dm:
            if cz >= cy and _indec_isomorphic(y, z):
                found = True
                break
        if not found:
            return False
    return True


# -- endomorphism algebras and the hom functor ------------------------------


def endomorphism_algebra(summands: list[Representation]):
    """Gamma = End(⊕ summands)^op as a BasedAlgebra.

    Basis: union of Hom(M_i, M_j) bases over ordered pairs; multiplication
    opposite to composition; idempotents are the identity maps. Returns
    (gamma, data) where data links idempotent blocks to summands.
    """
    if not summands:
        raise ValueError("empty summand list")
    lam = summands[0].algebra
    for s in summands:
        if s.algebra is not lam:
            raise AlgebraMismatch("summands over different algebras")
        if s.total == 0:
            raise ValueError("zero summand")
    p = lam.field.p
    r = len(summands)
    homs = {(i, j): hom_basis(summands[i], summands[j])
            for i in range(r) for j in range(r)}
    index = {}
    labels = []
    src = []
    tgt = []
    flat_by_pair = {}
    for i in range(r):
        for j in range(r):
            flat_by_pair[(i, j)] = np.array(
                [f.mat.reshape(-1) for f in homs[(i, j)]]) if homs[(i, j)] \
                else np.zeros((0, summands[j].total * summands[i].total),
                              dtype=np.int64)
            for k in range(len(homs[(i, j)])):
                index[(i, j, k)] = len(labels)
                labels.append(f"h({i + 1}->{j + 1};{k})")
                # Gamma-grading: src = Lambda-target, tgt = Lambda-source
                src.append(j)
                tgt.append(i)
    dim = len(labels)
    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for (i, j), fs in homs.items():
        for k, f in enumerate(fs):
            a_idx = index[(i, j, k)]
            for (s2, t2), gs in homs.items():
                if s2 != j:
                    continue
                for l, g in enumerate(gs):
                    b_idx = index[(s2, t2, l)]
                    comp = linalg.matmul(g.mat, f.mat, p)  # g ∘ f : M_i -> M_t2
                    if not comp.any():
                        continue
                    coords = linalg.solve(flat_by_pair[(i, t2)].T,
                                          comp.reshape(-1), p)
                    assert coords is not None
                    for kk, c in enumerate(coords):
                        if c:
                            mult[a_idx, b_idx, index[(i, t2, kk)]] = c
    idem = np.zeros((r, dim), dtype=np.int64)
    for i in range(r):
        ident = np.eye(summands[i].total, dtype=np.int64)
        coords = linalg.solve(flat_by_pair[(i, i)].T, ident.reshape(-1), p)
        assert coords is not None, "identity map missing from End"
        for kk, c in enumerate(coords):
            if c:
                idem[i, index[(i, i, kk)]] = c
    block_labels = [s.name or f"M{idx + 1}" for idx, s in enumerate(summands)]
    gamma = BasedAlgebra(lam.field, labels, mult, idem, src, tgt,
                         block_labels=block_labels, check=True)
    data = {"summands": list(summands), "homs": homs,
            "flat": flat_by_pair, "index": index}
    gamma._cache["endo"] = data
    return gamma, data


def hom_functor(gamma: BasedAlgebra, x: Representation) -> Representation:
    """Hom(M, x) as a Gamma = End(M)^op module; block i is Hom(M_i, x)."""
    data = gamma._cache.get("endo")
    if data is None:
        raise PreconditionError(
            "hom_functor requires an algebra built by endomorphism_algebra")
    summands = data["summands"]
    lam = summands[0].algebra
    if x.algebra is not lam:
        raise AlgebraMismatch("argument over a different algebra")
    p = lam.field.p
    r = len(summands)
    hom_to_x = [hom_basis(summands[i], x) for i in range(r)]
    flat_to_x = [np.array([f.mat.reshape(-1) for f in hom_to_x[i]])
                 if hom_to_x[i] else
                 np.zeros((0, x.total * summands[i].total), dtype=np.int64)
                 for i in range(r)]
    dims = [len(h) for h in hom_to_x]
    total = sum(dims)
    offsets = np.concatenate([[0], np.cumsum(dims)])
    rev = {flat_idx: key for key, flat_idx in data["index"].items()}
    actions = []
    for g in gamma.gens:
        # generator is a combination of basis hom maps M_i -> M_j acting by
        # precomposition Hom(M_j, x) -> Hom(M_i, x)
        act = np.zeros((total, total), dtype=np.int64)
        for bidx in np.nonzero(g.vec)[0]:
            c = int(g.vec[bidx])
            i, j, k = rev[int(bidx)]
            phi = data["homs"][(i, j)][k]
            if dims[j] == 0 or dims[i] == 0:
                continue
            block = np.zeros((dims[i], dims[j]), dtype=np.int64)
            for col, psi in enumerate(hom_to_x[j]):
                comp = linalg.matmul(psi.mat, phi.mat, p)
                coords = linalg.solve(flat_to_x[i].T, comp.reshape(-1), p)
                assert coords is not None
                block[:, col] = coords
            act[offsets[i]:offsets[i + 1],
                offsets[j]:offsets[j + 1]] += c * block
        actions.append(act % p)
    return Representation(gamma, dims, actions,
                          name=f"Hom(M,{x.name})" if x.name else "Hom(M,-)")


def rep_from_arrow_matrices(a: BasedAlgebra, dims, arrow_mats: dict,
                            check: bool = True, name: str = "") -> Representation:
    """Representation of a bound quiver algebra from per-arrow block matrices
    (target-dim x source-dim). Missing maps are zero; relation compatibility
    and nilpotency are verified when `check` is set, naming the violated
    relation."""
    q = a.quiver
    if q is None:
        raise ValueError("algebra was not built from a quiver")
    dims = tuple(int(d) for d in dims)
    total = sum(dims)
    offsets = np.concatenate([[0], np.cumsum(dims)])
    p = a.field.p
    blocks = {}
    actions = []
    for g in a.gens:
        mat = np.zeros((total, total), dtype=np.int64)
        block = arrow_mats.get(g.label)
        if block is not None and dims[g.tgt] and dims[g.src]:
            block = np.asarray(block, dtype=np.int64) % p
            if block.shape != (dims[g.tgt], dims[g.src]):
                raise ValueError(
                    f"map for arrow {g.label} has shape {block.shape}, "
                    f"expected ({dims[g.tgt]}, {dims[g.src]})")
            mat[offsets[g.tgt]:offsets[g.tgt + 1],
                offsets[g.src]:offsets[g.src + 1]] = block
        blocks[g.label] = mat
        actions.append(mat)
    rep = Representation(a, dims, actions, name=name)
    if check:
        _check_quiver_relations(a, rep, blocks)
    return rep


def _path_action(rep_blocks: dict, q, path) -> np.ndarray | None:
    mat = None
    for arrow_idx in path:  # traversal order: apply first arrow first
        step = rep_blocks[q.arrows[arrow_idx][0]]
        mat = step if mat is None else step @ mat
    return mat


def _check_quiver_relations(a: BasedAlgebra, rep: Representation,
                            blocks: dict):
    q = a.quiver
    p = a.field.p
    for rel in q.relations:
        acc = np.zeros((rep.total, rep.total), dtype=np.int64)
        for coeff, path in rel.terms:
            acc = (acc + coeff * _path_action(blocks, q, path)) % p
        if acc.any():
            label = q.path_label(rel.terms[0][1],
                                 q.arrows[rel.terms[0][1][0]][1])
            raise ValueError(f"relation {label} violated")
    # nilpotency: every length-N arrow word acts by zero
    out_arrows = [[] for _ in range(a.nblocks)]
    for idx, (_, s, _) in enumerate(q.arrows):
        out_arrows[s].append(idx)
    frontier = [((i,), blocks[q.arrows[i][0]]) for i in range(len(q.arrows))]
    for _ in range(q.nilpotency - 1):
        nxt = []
        for path, mat in frontier:
            tail = q.arrows[path[-1]][2]
            for nxt_arrow in out_arrows[tail]:
                nxt.append((path + (nxt_arrow,),
                            blocks[q.arrows[nxt_arrow][0]] @ mat % p))
        frontier = nxt
    for path, mat in frontier:
        if mat.any():
            label = q.path_label(path, q.arrows[path[0]][1])
            raise ValueError(
                f"nilpotency violated: path {label} acts nontrivially")


def annihilator_rows(reps: list[Representation]) -> np.ndarray:
    """Basis of {γ in A : γ·X = 0 for all X} in algebra coordinates."""
    a = reps[0].algebra
    p = a.field.p
    cols = []
    for x in reps:
        if x.total == 0:
            continue
        tensor = x.basis_action_tensor()  # (dimA, t, t)
        cols.append(tensor.reshape(a.dim, -1))
    if not cols:
        return np.eye(a.dim, dtype=np.int64)
    big = np.hstack(cols)  # action of each basis element, flattened
    return linalg.kernel(big.T, p)
