"""Nakayama test corpus: linear and cyclic bound quiver algebras with
assorted Kupisch profiles, all of dimension <= 40."""

from quiverhom import GFp, DEFAULT_PRIME, build_bound_quiver_algebra
from quiverhom.algebra import QuiverPresentation, Relation, \
    cyclic_nakayama_presentation

FIELD = GFp(DEFAULT_PRIME)


def linear_quiver(m: int, relations=(), nilpotency=None) -> QuiverPresentation:
    """A_m quiver 1 -> 2 -> ... -> m; relations as tuples of consecutive
    arrow indices in traversal order."""
    vertices = tuple(str(i + 1) for i in range(m))
    arrows = tuple((f"a{i + 1}", i, i + 1) for i in range(m - 1))
    rels = tuple(Relation(((1, path),)) for path in relations)
    if nilpotency is None:
        nilpotency = max(m, 2)
    return QuiverPresentation(vertices, arrows, rels, nilpotency)


def cyclic_quiver(m: int, relations=(), nilpotency=3) -> QuiverPresentation:
    """Cyclic quiver on m vertices, arrows a_i : i -> i+1 (mod m)."""
    vertices = tuple(str(i + 1) for i in range(m))
    arrows = tuple((f"a{i + 1}", i, (i + 1) % m) for i in range(m))
    rels = tuple(Relation(((1, path),)) for path in relations)
    return QuiverPresentation(vertices, arrows, rels, nilpotency)


def corpus_presentations():
    """(name, presentation) pairs; >= 20 Nakayama algebras."""
    out = []
    # the worked cyclic family
    for n in range(1, 5):
        out.append((f"cyclic_worked_{n}", cyclic_nakayama_presentation(n)))
    # hereditary linear quivers
    for m in range(2, 6):
        out.append((f"linear_A{m}", linear_quiver(m)))
    # linear with monomial relations
    out.append(("linear_A3_radsq", linear_quiver(3, [(0, 1)])))
    out.append(("linear_A4_radsq", linear_quiver(4, [(0, 1), (1, 2)])))
    out.append(("linear_A4_cube", linear_quiver(4, [(0, 1, 2)])))
    out.append(("linear_A5_two", linear_quiver(5, [(0, 1), (2, 3)])))
    out.append(("linear_A5_mid", linear_quiver(5, [(1, 2)])))
    out.append(("linear_A5_cube", linear_quiver(5, [(1, 2, 3)])))
    # selfinjective cyclic truncations kQ/R^N
    out.append(("cyclic_C2_N2", cyclic_quiver(2, nilpotency=2)))
    out.append(("cyclic_C2_N3", cyclic_quiver(2, nilpotency=3)))
    out.append(("cyclic_C3_N2", cyclic_quiver(3, nilpotency=2)))
    out.append(("cyclic_C3_N4", cyclic_quiver(3, nilpotency=4)))
    out.append(("cyclic_C4_N3", cyclic_quiver(4, nilpotency=3)))
    # cyclic with partial monomial relations
    out.append(("cyclic_C2_rel", cyclic_quiver(2, [(0, 1)], 3)))
    out.append(("cyclic_C3_rel1", cyclic_quiver(3, [(0, 1)], 3)))
    out.append(("cyclic_C3_cube", cyclic_quiver(3, [(0, 1, 2)], 4)))
    out.append(("cyclic_C4_two", cyclic_quiver(4, [(0, 1), (2, 3)], 3)))
    out.append(("cyclic_C4_one", cyclic_quiver(4, [(1, 2)], 3)))
    return out


def corpus_algebras():
    return [(name, build_bound_quiver_algebra(pres, FIELD))
            for name, pres in corpus_presentations()]
