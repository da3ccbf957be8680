import pytest

from quiverrep.algebra import (
    NotAdmissibleError,
    Relation,
    admissibility_report,
    build_algebra,
    trivial_extension,
)
from quiverrep.fields import GF, QQ
from quiverrep.quiver import Path, Quiver


def delta5():
    return Quiver(6, [("a3_1", 3, 1), ("a3_2", 3, 2), ("a3_4", 3, 4),
                      ("a5_4", 5, 4), ("a6_4", 6, 4)])


def doubled5():
    # every edge of delta5 in both directions
    return Quiver(6, [
        ("a3_1", 3, 1), ("a3_2", 3, 2), ("a3_4", 3, 4), ("a5_4", 5, 4), ("a6_4", 6, 4),
        ("b1_3", 1, 3), ("b2_3", 2, 3), ("b4_3", 4, 3), ("b4_5", 4, 5), ("b4_6", 4, 6),
    ])


def doubled5_relations(q):
    # zero: every length-2 path with distinct endpoints; commutativity: the
    # 2-cycles through vertices 3 and 4 agree pairwise
    rels = []
    for a in q.arrows:
        for b in q.arrows_from(a.target):
            if b.source != a.target:
                continue
            if a.source != b.target:
                rels.append(Relation([(1, q.path([a.name, b.name]))]))
    for v, names in ((3, ["a3_1", "a3_2", "a3_4"]), (4, ["b4_3", "b4_5", "b4_6"])):
        cycles = []
        for name in names:
            a = q.arrow(name)
            back = next(b for b in q.arrows_from(a.target) if b.target == v)
            cycles.append(q.path([name, back.name]))
        for w1, w2 in zip(cycles, cycles[1:]):
            rels.append(Relation([(1, w1), (-1, w2)]))
    return rels


def test_hereditary_euclidean_dimension():
    # alternating orientation admits no length-2 path: 6 idempotents + 5 arrows
    a = build_algebra(QQ, delta5(), [])
    assert a.dimension == 11
    assert a.nilpotency_degree == 2


def test_doubled_quiver_with_relations_dimension():
    q = doubled5()
    a = build_algebra(GF(5), q, doubled5_relations(q))
    assert a.dimension == 22
    assert a.nilpotency_degree == 3
    # one surviving 2-cycle class per vertex
    counts = a.pair_counts()
    for v in range(1, 7):
        paths_vv = [p for p in a.path_basis if (p.source, p.target) == (v, v)]
        assert len(paths_vv) == 2  # stationary + cycle class
        assert counts[(v, v)] == 2


def test_truncated_polynomial_algebra():
    q = Quiver(1, [("x", 1, 1)])
    a = build_algebra(QQ, q, [Relation([(1, q.path(["x", "x"]))])])
    assert a.dimension == 2
    assert a.nilpotency_degree == 2
    assert [repr(p) for p in a.path_basis] == ["e1", "x"]


def test_loop_without_relations_is_not_finite_dimensional():
    q = Quiver(1, [("x", 1, 1)])
    with pytest.raises(NotAdmissibleError):
        build_algebra(QQ, q, [], max_length=12)


def test_relation_with_short_term_is_rejected():
    q = Quiver(2, [("a", 1, 2)])
    with pytest.raises(ValueError):
        Relation([(1, q.path(["a"]))])


def test_mixed_length_relation_is_rejected():
    q = Quiver(1, [("x", 1, 1)])
    rel = Relation([(1, q.path(["x", "x"])), (-1, q.path(["x", "x", "x"]))])
    with pytest.raises(ValueError):
        build_algebra(QQ, q, [rel])


def test_opposite_is_an_involution():
    a = build_algebra(QQ, delta5(), [])
    op = a.opposite()
    assert op.dimension == a.dimension
    assert all(x.source == y.target and x.target == y.source
               for x, y in zip(op.quiver.arrows, a.quiver.arrows))
    assert op.opposite() is a


def test_opposite_of_bound_algebra_preserves_dimension():
    q = doubled5()
    a = build_algebra(QQ, q, doubled5_relations(q))
    op = a.opposite()
    assert op.dimension == 22
    # path-basis counts correspond under reversal of (source, target, length)
    def counts(alg):
        out = {}
        for p in alg.path_basis:
            key = (p.source, p.target, p.length)
            out[key] = out.get(key, 0) + 1
        return out
    ca, cop = counts(a), counts(op)
    assert cop == {(t, s, l): c for (s, t, l), c in ca.items()}


def test_stationary_paths_survive_and_dimension_adds_up():
    q = doubled5()
    a = build_algebra(GF(2), q, doubled5_relations(q))
    for v in range(1, 7):
        assert q.stationary(v) in a.basis_index
    assert sum(a.pair_counts().values()) == a.dimension


def test_relations_reduce_to_zero_in_the_algebra():
    q = doubled5()
    rels = doubled5_relations(q)
    a = build_algebra(GF(5), q, rels)
    for r in rels:
        assert a.reduce_combination(r.terms) == {}


@pytest.mark.parametrize("field", [GF(2), QQ])
def test_structure_constants_are_associative(field):
    q = doubled5()
    a = build_algebra(field, q, doubled5_relations(q))
    assert a.dimension <= 30
    for i in range(a.dimension):
        for j in range(a.dimension):
            for k in range(a.dimension):
                left = a.multiply(a.multiply_basis(i, j), {k: field.one()})
                right = a.multiply({i: field.one()}, a.multiply_basis(j, k))
                assert left == right


def test_hereditary_dimension_counts_paths():
    # commutative square without relations: 4 idempotents + 4 arrows + 2 paths
    q = Quiver(4, [("a", 1, 2), ("b", 1, 3), ("c", 2, 4), ("d", 3, 4)])
    a = build_algebra(QQ, q, [])
    assert a.dimension == 10
    assert a.nilpotency_degree == 3  # longest path has length 2


def test_commutative_square_with_relation():
    q = Quiver(4, [("a", 1, 2), ("b", 1, 3), ("c", 2, 4), ("d", 3, 4)])
    rel = Relation([(1, q.path(["a", "c"])), (-1, q.path(["b", "d"]))])
    a = build_algebra(QQ, q, [rel])
    assert a.dimension == 9
    # the two length-2 paths collapse to a single class
    assert len([p for p in a.path_basis if p.length == 2]) == 1


def test_semisimple_quiver_has_nilpotency_degree_one():
    a = build_algebra(GF(3), Quiver(3, []), [])
    assert a.dimension == 3
    assert a.nilpotency_degree == 1


def test_admissibility_report_for_hereditary():
    a = build_algebra(QQ, delta5(), [])
    rep = admissibility_report(a)
    assert rep.nilpotency_degree == 2
    assert rep.dimension == 11
    assert rep.passed
    assert rep.pair_counts[(3, 1)] == 1


def test_admissibility_report_for_bound_algebra():
    q = doubled5()
    a = build_algebra(QQ, q, doubled5_relations(q))
    rep = admissibility_report(a)
    assert rep.nilpotency_degree == 3
    assert rep.passed


def test_trivial_extension_of_base_field():
    a = build_algebra(QQ, Quiver(1, []), [])
    t = trivial_extension(a)
    assert t.dim == 2
    # the dual part squares to zero
    assert t.multiply(1, 1) == {}
    assert t.multiply(0, 0) == {0: QQ.one()}
    assert t.multiply(0, 1) == {1: QQ.one()}
    assert t.is_associative()


def test_trivial_extension_doubles_dimension_and_matches_bound_quotient():
    h = build_algebra(GF(5), delta5(), [])
    t = trivial_extension(h)
    assert t.dim == 2 * h.dimension == 22
    q = doubled5()
    lam = build_algebra(GF(5), q, doubled5_relations(q))
    assert t.dim == lam.dimension


def test_trivial_extension_form_is_symmetric_and_invertible():
    h = build_algebra(QQ, delta5(), [])
    t = trivial_extension(h)
    assert t.form == t.form.transpose()
    assert t.form.invert() is not None


def test_trivial_extension_is_associative_and_form_is_associative():
    h = build_algebra(GF(2), delta5(), [])
    t = trivial_extension(h)
    assert t.is_associative()
    # <xy, z> == <x, yz> makes the form the symmetric-algebra pairing
    f = h.field
    def form_val(u, v):
        s = f.zero()
        for i, ci in u.items():
            for j, cj in v.items():
                s = f.add(s, f.mul(f.mul(ci, cj), t.form[i, j]))
        return s
    def mult(u, v):
        out = {}
        for i, ci in u.items():
            for j, cj in v.items():
                for k, ck in t.table.get((i, j), {}).items():
                    out[k] = f.add(out.get(k, f.zero()), f.mul(f.mul(ci, cj), ck))
        return {k: c for k, c in out.items() if c != f.zero()}
    import random
    rng = random.Random(0)
    units = [{i: f.one()} for i in range(t.dim)]
    for _ in range(200):
        x, y, z = (rng.choice(units) for _ in range(3))
        assert form_val(mult(x, y), z) == form_val(x, mult(y, z))
