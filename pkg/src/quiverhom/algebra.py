"""Finite-dimensional based algebras: bound quiver algebras kQ/I,
opposite algebras, and ideal quotients.

A BasedAlgebra stores a full multiplication tensor over GF(p) together with
a complete set of orthogonal idempotents and a bi-grading of the basis
(every basis element b satisfies e_tgt(b) · b · e_src(b) = b). The grading
is what makes representations block-structured and keeps all downstream
linear algebra small.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import linalg
from .errors import PreconditionError
from .linalg import GFp, Subspace


Path = tuple[int, ...]  # arrow indices in traversal order (first arrow first)


@dataclass(frozen=True)
class Relation:
    """Linear combination of parallel paths of length >= 2.

    Terms are (coefficient mod p, path); all paths share source and target.
    """

    terms: tuple[tuple[int, Path], ...]


@dataclass(frozen=True)
class QuiverPresentation:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, int, int], ...]  # (name, source idx, target idx)
    relations: tuple[Relation, ...]
    nilpotency: int

    def __post_init__(self):
        if self.nilpotency < 2:
            raise ValueError("nilpotency must be at least 2")
        nv = len(self.vertices)
        if len(set(self.vertices)) != nv:
            raise ValueError("duplicate vertex names")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        for name, s, t in self.arrows:
            if not (0 <= s < nv and 0 <= t < nv):
                raise ValueError(f"arrow {name} has undeclared endpoints")
        for rel in self.relations:
            if not rel.terms:
                raise ValueError("empty relation")
            ends = set()
            for coeff, path in rel.terms:
                if len(path) < 2:
                    raise ValueError(
                        "relation term of length < 2 (ideal not admissible)")
                for k in range(len(path) - 1):
                    if self.arrows[path[k]][2] != self.arrows[path[k + 1]][1]:
                        raise ValueError("relation term is not a composable path")
                ends.add((self.arrows[path[0]][1], self.arrows[path[-1]][2]))
            if len(ends) != 1:
                raise ValueError("relation terms have mismatched endpoints")

    def arrow_index(self, name: str) -> int:
        for i, (n, _, _) in enumerate(self.arrows):
            if n == name:
                return i
        raise KeyError(name)

    @property
    def is_nakayama(self) -> bool:
        """Every vertex has at most one outgoing and one incoming arrow."""
        outs = [a[1] for a in self.arrows]
        ins = [a[2] for a in self.arrows]
        return (len(outs) == len(set(outs))) and (len(ins) == len(set(ins)))

    def path_label(self, path: Path, source: int) -> str:
        if not path:
            return f"e_{self.vertices[source]}"
        return "*".join(self.arrows[i][0] for i in reversed(path))

    def reversed(self) -> "QuiverPresentation":
        arrows = tuple((n, t, s) for (n, s, t) in self.arrows)
        rels = tuple(
            Relation(tuple((c, tuple(reversed(p))) for c, p in r.terms))
            for r in self.relations
        )
        return QuiverPresentation(self.vertices, arrows, rels, self.nilpotency)


@dataclass(frozen=True)
class Generator:
    """Homogeneous algebra generator: e_tgt · vec · e_src = vec."""

    label: str
    vec: np.ndarray
    src: int
    tgt: int


class BasedAlgebra:
    """Associative unital GF(p)-algebra with a graded basis.

    Attributes:
        field: the prime field.
        dim: vector-space dimension.
        labels: basis element names.
        mult: (dim, dim, dim) tensor, mult[i, j] = coordinates of b_i · b_j.
        src, tgt: grading (idempotent block indices per basis element).
        idem: (r, dim) array of orthogonal idempotent vectors summing to 1.
        gens: generating set beyond the idempotents (radical generators,
            extended when the idempotents and radical do not generate).
        quiver: presentation metadata when built from a bound quiver.
    """

    def __init__(self, field: GFp, labels, mult, idem, src, tgt, *,
                 gens=None, radical_rows=None, quiver=None,
                 block_labels=None, check=True):
        self.field = field
        p = field.p
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = np.asarray(mult, dtype=np.int64) % p
        self.idem = np.asarray(idem, dtype=np.int64) % p
        self.src = np.asarray(src, dtype=np.int64)
        self.tgt = np.asarray(tgt, dtype=np.int64)
        self.nblocks = self.idem.shape[0]
        self.block_labels = (list(block_labels) if block_labels is not None
                             else [str(i + 1) for i in range(self.nblocks)])
        self.quiver = quiver
        self._opposite: BasedAlgebra | None = None
        self._cache: dict = {}
        if self.mult.shape != (self.dim, self.dim, self.dim):
            raise ValueError("multiplication tensor has wrong shape")
        if check:
            self._validate_structure()
        self.radical = self._compute_radical(radical_rows)
        self.radical_powers, self.loewy_length = self._compute_powers()
        self.gens = list(gens) if gens is not None else self._derive_gens()
        self._words, self._word_elems, self._expansion = self._word_table()

    # -- basic arithmetic --------------------------------------------------

    def multiply(self, x, y) -> np.ndarray:
        p = self.field.p
        return np.einsum("i,j,ijk->k", x % p, y % p, self.mult) % p

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix of y -> x·y in basis coordinates."""
        return np.einsum("i,ijk->kj", x % self.field.p, self.mult) % self.field.p

    def right_mult_matrix(self, y) -> np.ndarray:
        """Matrix of x -> x·y in basis coordinates."""
        return np.einsum("j,ijk->ki", y % self.field.p, self.mult) % self.field.p

    @property
    def unit(self) -> np.ndarray:
        return self.idem.sum(axis=0) % self.field.p

    def basis_vector(self, k: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[k] = 1
        return v

    # -- validation --------------------------------------------------------

    def _validate_structure(self):
        p = self.field.p
        m = self.mult
        # associativity on all basis triples
        left = np.einsum("ijm,mkl->ijkl", m, m) % p
        right = np.einsum("jkm,iml->ijkl", m, m) % p
        if (left != right).any():
            raise ValueError("structure constants are not associative")
        one = self.unit
        lm = self.left_mult_matrix(one)
        rm = self.right_mult_matrix(one)
        eye = np.eye(self.dim, dtype=np.int64)
        if (lm != eye).any() or (rm != eye).any():
            raise ValueError("idempotents do not sum to the unit")
        for i in range(self.nblocks):
            for j in range(self.nblocks):
                prod = self.multiply(self.idem[i], self.idem[j])
                expect = self.idem[i] if i == j else np.zeros(self.dim, dtype=np.int64)
                if (prod != expect).any():
                    raise ValueError("idempotents are not orthogonal")
        for k in range(self.dim):
            b = self.basis_vector(k)
            if (self.multiply(self.idem[self.tgt[k]], b) != b).any() or \
               (self.multiply(b, self.idem[self.src[k]]) != b).any():
                raise ValueError(f"basis element {self.labels[k]} is not graded")

    # -- radical -----------------------------------------------------------

    def _trace_form_kernel(self) -> np.ndarray:
        # T[j, i] = trace of left multiplication by b_i·b_j; kernel of T is
        # the radical when p > dim.
        p = self.field.p
        t = np.einsum("kjj->k", self.mult) % p
        tform = np.einsum("ijk,k->ji", self.mult, t) % p
        return linalg.kernel(tform, p)

    def _compute_radical(self, radical_rows) -> Subspace:
        p = self.field.p
        if radical_rows is not None:
            rad = Subspace(self.field, self.dim, radical_rows)
            if p > self.dim:
                trace_rad = Subspace(self.field, self.dim,
                                     self._trace_form_kernel(), canonical=True)
                if trace_rad != rad:
                    raise ValueError(
                        "declared radical disagrees with the trace-form radical")
            return rad
        if p <= self.dim:
            raise PreconditionError(
                f"radical computation needs p > dim (p={p}, dim={self.dim}); "
                "use a larger field modulus")
        return Subspace(self.field, self.dim, self._trace_form_kernel(),
                        canonical=True)

    def subspace_product(self, u_rows, v_rows) -> np.ndarray:
        if len(u_rows) == 0 or len(v_rows) == 0:
            return np.zeros((0, self.dim), dtype=np.int64)
        prods = np.einsum("ai,bj,ijk->abk", u_rows % self.field.p,
                          v_rows % self.field.p, self.mult) % self.field.p
        return linalg.row_space(prods.reshape(-1, self.dim), self.field.p)

    def _compute_powers(self):
        powers = []
        cur = self.radical.basis
        steps = 0
        while cur.shape[0] > 0:
            powers.append(cur)
            cur = self.subspace_product(cur, self.radical.basis)
            steps += 1
            if steps > self.dim + 1:
                raise ValueError("radical is not nilpotent")
        loewy = len(powers) + 1
        return powers, loewy

    # -- generators and word table ------------------------------------------

    def _homogeneous_pieces(self, vec, label):
        out = []
        p = self.field.p
        for t in range(self.nblocks):
            for s in range(self.nblocks):
                piece = self.multiply(self.idem[t], self.multiply(vec, self.idem[s]))
                if piece.any():
                    out.append(Generator(f"{label}[{t},{s}]", piece % p, s, t))
        return out

    def _derive_gens(self) -> list[Generator]:
        p = self.field.p
        j_rows = self.radical.basis
        j2 = self.subspace_product(j_rows, j_rows)
        gens: list[Generator] = []
        # homogeneous lift of a basis of J/J^2
        span = j2.copy()
        for row in j_rows:
            for piece in self._homogeneous_pieces(row, "j"):
                if not linalg.in_row_space(span, piece.vec, p):
                    gens.append(piece)
                    span = linalg.sum_rows(span, piece.vec.reshape(1, -1), p)
        # extend until idempotents + gens generate the whole algebra
        while True:
            spanned = self._generated_span(gens)
            if spanned.shape[0] == self.dim:
                return gens
            for k in range(self.dim):
                if not linalg.in_row_space(spanned, self.basis_vector(k), p):
                    pieces = self._homogeneous_pieces(self.basis_vector(k),
                                                      self.labels[k])
                    added = False
                    for piece in pieces:
                        if not linalg.in_row_space(spanned, piece.vec, p):
                            gens.append(piece)
                            added = True
                            break
                    if added:
                        break
            else:
                raise ValueError("generator derivation failed to progress")

    def _token_elem(self, token) -> np.ndarray:
        kind, idx = token
        return self.idem[idx] if kind == "e" else self.gens[idx].vec

    def _generated_span(self, gens) -> np.ndarray:
        p = self.field.p
        rows = [self.idem[i] for i in range(self.nblocks)]
        rows += [g.vec for g in gens]
        span = linalg.row_space(np.array(rows), p)
        while True:
            new_rows = [span]
            for g in gens:
                new_rows.append(linalg.matmul(span, self.right_mult_matrix(g.vec).T, p))
            bigger = linalg.row_space(np.vstack(new_rows), p)
            if bigger.shape[0] == span.shape[0]:
                return span
            span = bigger

    def _word_table(self):
        """Expand every basis element over products of idempotents/generators.

        Returns (words, word value matrix, expansion coefficients) with
        basis_k = sum_w expansion[k, w] · value(word_w).
        """
        p = self.field.p
        tokens = [("e", i) for i in range(self.nblocks)] + \
                 [("g", j) for j in range(len(self.gens))]
        words: list[tuple] = []
        values: list[np.ndarray] = []
        span = np.zeros((0, self.dim), dtype=np.int64)
        frontier: list[tuple[tuple, np.ndarray]] = []
        for t in tokens:
            v = self._token_elem(t)
            if v.any() and not linalg.in_row_space(span, v, p):
                words.append((t,))
                values.append(v)
                span = linalg.sum_rows(span, v.reshape(1, -1), p)
                frontier.append(((t,), v))
        while span.shape[0] < self.dim and frontier:
            new_frontier = []
            for w, val in frontier:
                for t in tokens:
                    nv = self.multiply(val, self._token_elem(t))
                    if nv.any() and not linalg.in_row_space(span, nv, p):
                        nw = w + (t,)
                        words.append(nw)
                        values.append(nv)
                        span = linalg.sum_rows(span, nv.reshape(1, -1), p)
                        new_frontier.append((nw, nv))
                        if span.shape[0] == self.dim:
                            break
                if span.shape[0] == self.dim:
                    break
            frontier = new_frontier
        if span.shape[0] != self.dim:
            raise ValueError("generators do not generate the algebra")
        value_mat = np.array(values)  # (nwords, dim)
        expansion = linalg.solve_matrix(value_mat.T,
                                        np.eye(self.dim, dtype=np.int64), p)
        assert expansion is not None
        return words, value_mat, expansion.T  # expansion: (dim, nwords)

    # -- derived algebras ----------------------------------------------------

    def opposite(self) -> "BasedAlgebra":
        """Same basis, reversed multiplication; cached and involutive."""
        if self._opposite is not None:
            return self._opposite
        gens = [Generator(g.label, g.vec, g.tgt, g.src) for g in self.gens]
        quiver = self.quiver.reversed() if self.quiver is not None else None
        op = BasedAlgebra(
            self.field, self.labels, np.swapaxes(self.mult, 0, 1),
            self.idem, self.tgt, self.src, gens=gens,
            radical_rows=self.radical.basis, quiver=quiver,
            block_labels=self.block_labels, check=False)
        op._opposite = self
        self._opposite = op
        return op

    def quotient_by_ideal(self, ideal_rows) -> tuple["BasedAlgebra", np.ndarray]:
        """Quotient by a two-sided ideal given as a subspace.

        Returns (quotient, reduction matrix) where reduction maps old
        coordinates onto the kept (non-pivot) coordinates.
        """
        p = self.field.p
        red, rk, pivots = linalg.rref(ideal_rows, p)
        red = red[:rk]
        kept = [k for k in range(self.dim) if k not in set(pivots)]
        if not kept:
            raise ValueError("quotient by the whole algebra")
        reduce_mat = np.zeros((len(kept), self.dim), dtype=np.int64)
        for row, c in enumerate(kept):
            reduce_mat[row, c] = 1
            for i, pc in enumerate(pivots):
                reduce_mat[row, pc] = (-red[i, c]) % p
        # reduce_mat[:, v] = coordinates of (v mod ideal) on kept elements
        qdim = len(kept)
        qmult = np.zeros((qdim, qdim, qdim), dtype=np.int64)
        for a, ka in enumerate(kept):
            for b, kb in enumerate(kept):
                qmult[a, b] = reduce_mat @ self.mult[ka, kb] % p
        qidem_all = (self.idem @ reduce_mat.T) % p
        keep_blocks = [i for i in range(self.nblocks) if qidem_all[i].any()]
        block_map = {old: new for new, old in enumerate(keep_blocks)}
        qsrc = [block_map[int(self.src[k])] for k in kept]
        qtgt = [block_map[int(self.tgt[k])] for k in kept]
        rad_rows = (self.radical.basis @ reduce_mat.T) % p
        quotient = BasedAlgebra(
            self.field, [self.labels[k] for k in kept], qmult,
            qidem_all[keep_blocks], qsrc, qtgt,
            radical_rows=linalg.row_space(rad_rows, p),
            block_labels=[self.block_labels[i] for i in keep_blocks],
            check=True)
        return quotient, reduce_mat

    def __repr__(self):
        return (f"BasedAlgebra(dim={self.dim}, blocks={self.nblocks}, "
                f"p={self.field.p})")


def radical_and_powers(a: BasedAlgebra):
    """(radical, strictly decreasing powers J ⊇ J² ⊇ …, Loewy length)."""
    powers = [Subspace(a.field, a.dim, rows, canonical=True)
              for rows in a.radical_powers]
    return a.radical, powers, a.loewy_length


def _enumerate_paths(q: QuiverPresentation):
    """All paths of length < nilpotency as (source, arrows) pairs,
    ordered by length then lexicographically. Deterministic."""
    nv = len(q.vertices)
    out_arrows = [[] for _ in range(nv)]
    for idx, (_, s, _) in enumerate(q.arrows):
        out_arrows[s].append(idx)
    paths = [(v, ()) for v in range(nv)]
    frontier = list(paths)
    for _ in range(q.nilpotency - 1):
        nxt = []
        for src_v, arrows in frontier:
            cur_end = q.arrows[arrows[-1]][2] if arrows else src_v
            for a in out_arrows[cur_end]:
                nxt.append((src_v, arrows + (a,)))
        paths.extend(nxt)
        frontier = nxt
    return paths


def build_bound_quiver_algebra(q: QuiverPresentation, field: GFp) -> BasedAlgebra:
    """The algebra kQ/(I + R^N): truncated path algebra modulo the two-sided
    ideal generated by the relations, with path-coset basis.

    Kept paths are the complement of the ideal in path coordinates
    (deterministic echelon choice). Idempotents are the vertex classes.
    """
    p = field.p
    paths = _enumerate_paths(q)
    index = {pq: i for i, pq in enumerate(paths)}
    npaths = len(paths)
    nv = len(q.vertices)

    def path_tgt(entry):
        src_v, arrows = entry
        return q.arrows[arrows[-1]][2] if arrows else src_v

    # product table in the truncated path algebra: concat or die
    def path_mul(i: int, j: int) -> int:
        """Index of (path_i · path_j) = traverse j then i, or -1."""
        si, ai = paths[i]
        sj, aj = paths[j]
        if path_tgt(paths[j]) != si:
            return -1
        cat = (sj, aj + ai)
        return index.get(cat, -1)

    def rel_vector(rel: Relation) -> np.ndarray:
        v = np.zeros(npaths, dtype=np.int64)
        for coeff, path in rel.terms:
            src_v = q.arrows[path[0]][1]
            key = (src_v, path)
            if key in index:
                v[index[key]] = (v[index[key]] + coeff) % p
        return v

    ideal = linalg.row_space(
        np.array([rel_vector(r) for r in q.relations]).reshape(-1, npaths), p
    ) if q.relations else np.zeros((0, npaths), dtype=np.int64)

    # close under left/right multiplication by arrows until stable
    arrow_paths = [index[(q.arrows[a][1], (a,))] for a in range(len(q.arrows))]
    lmul = {}
    rmul = {}
    for a in arrow_paths:
        lmul[a] = np.array([path_mul(a, j) for j in range(npaths)])
        rmul[a] = np.array([path_mul(j, a) for j in range(npaths)])

    def apply_index_map(rows, imap):
        out = np.zeros_like(rows)
        for j in range(npaths):
            k = imap[j]
            if k >= 0:
                out[:, k] = rows[:, j]
        return out

    while ideal.shape[0]:
        stacked = [ideal]
        for a in arrow_paths:
            stacked.append(apply_index_map(ideal, lmul[a]))
            stacked.append(apply_index_map(ideal, rmul[a]))
        bigger = linalg.row_space(np.vstack(stacked), p)
        if bigger.shape[0] == ideal.shape[0]:
            break
        ideal = bigger

    red, rk, pivots = linalg.rref(ideal, p)
    red = red[:rk]
    kept = [k for k in range(npaths) if k not in set(pivots)]
    reduce_mat = np.zeros((len(kept), npaths), dtype=np.int64)
    for row, c in enumerate(kept):
        reduce_mat[row, c] = 1
        for i, pc in enumerate(pivots):
            reduce_mat[row, pc] = (-red[i, c]) % p

    dim = len(kept)
    mult = np.zeros((dim, dim, dim), dtype=np.int64)
    for a, ka in enumerate(kept):
        for b, kb in enumerate(kept):
            k = path_mul(ka, kb)
            if k >= 0:
                mult[a, b] = reduce_mat[:, k]

    labels = [q.path_label(paths[k][1], paths[k][0]) for k in kept]
    src = [paths[k][0] for k in kept]
    tgt = [path_tgt(paths[k]) for k in kept]
    kept_pos = {k: i for i, k in enumerate(kept)}
    for v in range(nv):
        if index[(v, ())] not in kept_pos:
            raise ValueError("a vertex idempotent died in the quotient")
    idem = np.zeros((nv, dim), dtype=np.int64)
    for v in range(nv):
        idem[v, kept_pos[index[(v, ())]]] = 1

    gens = []
    for a_idx, (name, s, t) in enumerate(q.arrows):
        pi = index[(s, (a_idx,))]
        if pi not in kept_pos:
            raise ValueError(
                f"arrow {name} lies in the ideal; ideal is not admissible")
        vec = np.zeros(dim, dtype=np.int64)
        vec[kept_pos[pi]] = 1
        gens.append(Generator(name, vec, s, t))

    radical_rows = np.eye(dim, dtype=np.int64)[
        [i for i, k in enumerate(kept) if len(paths[k][1]) > 0]]

    alg = BasedAlgebra(field, labels, mult, idem, src, tgt, gens=gens,
                       radical_rows=radical_rows, quiver=q,
                       block_labels=list(q.vertices), check=True)
    # sanity from the construction: J^N = 0 and relations lie in J^2
    if alg.loewy_length > q.nilpotency:
        raise ValueError("J^N != 0 after quotient; construction bug")
    alg._cache["kept_paths"] = [paths[k] for k in kept]
    return alg


def monomial_dim_by_path_count(q: QuiverPresentation) -> int:
    """Independent dimension count for monomial ideals: paths of length < N
    avoiding every relation path as a contiguous subword.

    Raises ValueError on non-monomial input. Used as a cross-check oracle.
    """
    bad = []
    for rel in q.relations:
        if len(rel.terms) != 1:
            raise ValueError("not a monomial ideal")
        bad.append(rel.terms[0][1])
    count = 0
    for _, arrows in _enumerate_paths(q):
        dead = False
        for b in bad:
            lb = len(b)
            if any(arrows[i:i + lb] == b for i in range(len(arrows) - lb + 1)):
                dead = True
                break
        if not dead:
            count += 1
    return count


def cyclic_nakayama_presentation(n: int) -> QuiverPresentation:
    """The cyclic quiver on n+1 vertices with arrows a_i : i -> i+1 (indices
    mod n+1) and relations a_{i+1} a_i for 1 <= i <= n, nilpotency 3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    nv = n + 1
    vertices = tuple(str(i + 1) for i in range(nv))
    arrows = tuple((f"a{i + 1}", i, (i + 1) % nv) for i in range(nv))
    rels = tuple(
        Relation(((1, (i, i + 1)),)) for i in range(n)
    )  # path: traverse a_{i+1} after a_{i+1+1}... stored in traversal order
    return QuiverPresentation(vertices, arrows, rels, 3)
