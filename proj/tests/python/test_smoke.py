"""Smoke tests for the python bindings; exercises one path through every
exposed subsystem."""

import qcat


def test_quiver_basics():
    q = qcat.named_quiver("A3")
    assert q.n == 3
    assert q.dynkin and q.dynkin_label == "A3"
    assert q.cartan_matrix()[0] == [2, -1, 0]
    assert q.euler_matrix()[0] == [1, -1, 0]
    assert q.coxeter_word() == [1, 2, 3]
    tri = qcat.Quiver(3, [(1, 2), (2, 3), (1, 3)], "triangle")
    assert not tri.dynkin


def test_weyl_group():
    g = qcat.WeylGroup(qcat.named_quiver("A3"))
    w = g.evaluate_word([1, 2, 3, 2])
    assert w.length == 4
    assert g.is_reduced([1, 2, 3, 2])
    assert not g.is_reduced([1, 1])
    assert len(g.enumerate()) == 24
    w0 = g.longest_element()
    assert w0.length == 6
    assert g.bruhat_leq(w, w0)
    assert g.weak_leq_right(g.evaluate_word([1]), g.evaluate_word([1, 2]))


def test_leftmost_and_table():
    q = qcat.named_quiver("A3")
    g = qcat.WeylGroup(q)
    assert qcat.leftmost_positions(g, [1, 2, 3, 2]) == [1, 2, 3, 5]
    assert qcat.category_of(g, [1, 2, 3, 2]) == [(1, 0), (2, 0), (3, 0), (2, 1)]
    assert qcat.word_from_missing(q, [(1, 0), (2, 0), (3, 0), (2, 1)]) == [1, 2, 3, 2]

    tri = qcat.named_quiver("triangle")
    gt = qcat.WeylGroup(tri)
    assert qcat.leftmost_positions(gt, [1, 2, 3, 2, 1]) == [1, 2, 3, 5, 7]

    rows = qcat.preprojective_table(q)
    assert len(rows) == 6
    assert rows[0] == (1, 0, [1, 0, 0])
    assert qcat.ar_word_w0(q) == [1, 2, 3, 1, 2, 1]
    assert "digraph" in qcat.ar_dot(q)


def test_ideals():
    rep = qcat.ideal_report(qcat.named_quiver("A2"), [1, 2])
    assert rep["dim_pi"] == 4
    assert rep["dim_Iw"] == 1
    assert rep["C_of"] == [[0, 1]]
    assert sorted(rep["C_of_quotient"]) == [[1, 0], [1, 1]]


def test_sortable():
    g = qcat.WeylGroup(qcat.named_quiver("A2"))
    assert qcat.is_c_sortable(g, [1, 2, 1])
    assert not qcat.is_c_sortable(g, [2, 1])
    assert qcat.sort_c(g, [2, 1]) == [2]
    assert qcat.is_torsion_candidate(g, [2, 1])
    assert not qcat.is_torsion_candidate(g, [2])
    assert qcat.inversion_set(g, [1, 2]) == [[1, 0], [1, 1]]
    assert qcat.torsion_free_of(qcat.named_quiver("A2"), [2]) == [[0, 1]]
    assert qcat.verify_torsion_pair(qcat.named_quiver("A2"), [2, 1])


def test_grassmann_and_antimatroid():
    assert qcat.rectangle_word(4, 2) == [[2, 3, 4], [1, 2, 3]]
    assert len(qcat.partitions_in_rectangle(4, 2)) == 10
    assert qcat.verify_le_theorem(4, 2)
    g = qcat.WeylGroup(qcat.named_quiver("A2"))
    feas = qcat.feasible_sets(g, [1, 2, 1])
    assert [set(s) for s in feas] == [set(), {1}, {2}, {1, 2}, {2, 3}, {1, 2, 3}]
    axioms = qcat.antimatroid_axioms(g, [1, 2, 1])
    assert axioms["accessible"] and axioms["antimatroid"] and axioms["supersolvable"]


def test_verify_suite():
    rep = qcat.run_suite("bijection", qcat.named_quiver("A2"))
    assert rep["pass"]
    assert any("quotient-closed" in c["name"] for c in rep["checks"])


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
