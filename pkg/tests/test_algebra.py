import numpy as np
import pytest

from quiverhom import GFp, build_bound_quiver_algebra, radical_and_powers
from quiverhom.algebra import (
    QuiverPresentation, Relation, cyclic_nakayama_presentation,
    monomial_dim_by_path_count,
)
from quiverhom.errors import PreconditionError

from corpus import corpus_presentations, FIELD


def test_cyclic2_basis(cyclic2):
    assert cyclic2.dim == 7
    assert cyclic2.labels == ["e_1", "e_2", "e_3", "a1", "a2", "a3", "a1*a3"]
    assert cyclic2.nblocks == 3


def test_one_vertex_semisimple(semisimple):
    assert semisimple.dim == 1
    assert semisimple.radical.dim == 0
    assert semisimple.loewy_length == 1


def test_a2_dimension(a2):
    assert a2.dim == 3
    assert a2.radical.dim == 1
    assert a2.loewy_length == 2


def test_presentation_validation():
    with pytest.raises(ValueError):
        # length-1 relation term: not admissible
        QuiverPresentation(("1", "2"), (("a", 0, 1),),
                           (Relation(((1, (0,)),)),), 2)
    with pytest.raises(ValueError):
        # non-composable path
        QuiverPresentation(("1", "2"), (("a", 0, 1),),
                           (Relation(((1, (0, 0)),)),), 3)
    with pytest.raises(ValueError):
        QuiverPresentation(("1",), (), (), 1)  # nilpotency too small


def test_radical_and_powers(cyclic2, semisimple):
    rad, powers, loewy = radical_and_powers(cyclic2)
    assert rad.dim == 4
    assert [p.dim for p in powers] == [4, 1]
    assert loewy == 3
    _, _, l1 = radical_and_powers(semisimple)
    assert l1 == 1


def test_radical_is_arrow_span(cyclic2):
    # nontrivial path cosets span the radical
    arrow_coords = [i for i, lbl in enumerate(cyclic2.labels)
                    if not lbl.startswith("e_")]
    assert sorted(arrow_coords) == [3, 4, 5, 6]
    for c in arrow_coords:
        v = np.zeros(cyclic2.dim, dtype=np.int64)
        v[c] = 1
        assert cyclic2.radical.contains_vector(v)


def test_opposite_involution(cyclic2, a2, semisimple):
    for a in (cyclic2, a2, semisimple):
        op = a.opposite()
        assert op.opposite() is a
        assert (np.swapaxes(op.mult, 0, 1) == a.mult).all()
    # commutative one-vertex algebra: opposite has identical constants
    assert (semisimple.opposite().mult == semisimple.mult).all()


def test_opposite_is_reversed_quiver(cyclic2):
    op = cyclic2.opposite()
    rev = op.quiver
    assert rev is not None
    # arrows reversed
    orig = {(s, t) for _, s, t in cyclic2.quiver.arrows}
    assert {(t, s) for _, s, t in rev.arrows} == orig
    rebuilt = build_bound_quiver_algebra(rev, cyclic2.field)
    assert rebuilt.dim == cyclic2.dim


@pytest.mark.parametrize("name,pres", corpus_presentations())
def test_monomial_path_count_oracle(name, pres):
    """Ideal-closure dimension agrees with independent path counting on
    monomial inputs."""
    a = build_bound_quiver_algebra(pres, FIELD)
    assert a.dim == monomial_dim_by_path_count(pres)


@pytest.mark.parametrize("name,pres", corpus_presentations()[:6])
def test_associativity_and_unit(name, pres):
    a = build_bound_quiver_algebra(pres, FIELD)
    m = a.mult
    left = np.einsum("ijm,mkl->ijkl", m, m) % a.field.p
    right = np.einsum("jkm,iml->ijkl", m, m) % a.field.p
    assert (left == right).all()
    one = a.unit
    for k in range(a.dim):
        b = a.basis_vector(k)
        assert (a.multiply(one, b) == b).all()
        assert (a.multiply(b, one) == b).all()


def test_nonmonomial_relation():
    # commutativity-style relation b*a - d*c on a square quiver
    pres = QuiverPresentation(
        ("1", "2", "3", "4"),
        (("a", 0, 1), ("b", 1, 3), ("c", 0, 2), ("d", 2, 3)),
        (Relation(((1, (0, 1)), (FIELD.p - 1, (2, 3)))),),
        3,
    )
    a = build_bound_quiver_algebra(pres, FIELD)
    # paths: 4 vertices + 4 arrows + 2 length-2 paths, one relation
    assert a.dim == 4 + 4 + 1
    with pytest.raises(ValueError):
        monomial_dim_by_path_count(pres)


def test_small_field_refusal_on_trace_path():
    # generic radical computation needs p > dim
    f5 = GFp(5)
    a = build_bound_quiver_algebra(cyclic_nakayama_presentation(2), f5)
    # quiver route works at p = 5 (arrow ideal)
    assert a.radical.dim == 4
    # a structure-only rebuild without the declared radical must refuse
    from quiverhom.algebra import BasedAlgebra
    with pytest.raises(PreconditionError):
        BasedAlgebra(f5, a.labels, a.mult, a.idem, a.src, a.tgt, check=False)


def test_quotient_by_ideal(cyclic2):
    # kill the arrow ideal: quotient is the semisimple product of vertices
    q, _ = cyclic2.quotient_by_ideal(cyclic2.radical.basis)
    assert q.dim == 3
    assert q.radical.dim == 0
    assert q.loewy_length == 1


def test_nakayama_detection(cyclic2, a2):
    assert cyclic2.quiver.is_nakayama
    assert a2.quiver.is_nakayama
    pres = QuiverPresentation(
        ("1", "2", "3"), (("a", 0, 1), ("b", 0, 2)), (), 2)
    assert not pres.is_nakayama
