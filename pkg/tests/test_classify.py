"""Closed-form classification: type A counts, type D patterns, the E table,
and the universal (HH^1, det C) route."""

import pytest

from conftest import cached_algebra
from cthh.algebra import cartan
from cthh.classify import (
    E_TABLE_ROWS,
    DTypeParams,
    classify_D,
    hh_closed_form,
    hh_type_A,
    hh_type_D,
    hh_universal,
    lookup_E,
)
from cthh.errors import NotInTableError
from cthh.oracle import hh1_dim
from cthh.quiver import Quiver, dynkin_seed
from cthh.series import HSeries


def oriented_cycle(n):
    return Quiver.make(n, [(i, i % n + 1) for i in range(1, n + 1)])


def test_type_a_no_cycles():
    assert hh_type_A(dynkin_seed("A", 5)) == HSeries.of()


def test_type_a_one_triangle():
    assert hh_type_A(oriented_cycle(3)) == HSeries.of(3)


def test_type_a_two_triangles():
    # two triangles joined by a path: an A6-class quiver with t = 2
    q = Quiver.make(6, [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)])
    assert hh_type_A(q) == HSeries.of(3, 3)


def test_classify_d_oriented_cycle():
    params = classify_D(oriented_cycle(4))
    assert params.subtype == "IVa"
    assert params.series() == HSeries.of(4)
    assert hh_type_D(oriented_cycle(5)) == HSeries.of(5)


def test_classify_d_two_triangles():
    q = Quiver.make(4, [(1, 2), (2, 3), (3, 1), (2, 4), (4, 1)])
    params = classify_D(q)
    assert params.subtype == "II"
    assert params.series() == HSeries.of(3)


def test_classify_d_hereditary_fork():
    q = Quiver.make(5, [(1, 3), (2, 3), (3, 4), (4, 5)])
    params = classify_D(q)
    assert params.subtype == "I"
    assert params.params[1] == 0
    assert params.series() == HSeries.of()


def test_type_d_formulas():
    assert DTypeParams("IVa", (5,)).series() == HSeries.of(5)
    assert DTypeParams("III", (2, 1, 1, 0)).series() == HSeries.of(4, 3)
    assert DTypeParams("II", (3, 2, 2, 1)).series() == HSeries.of(3, 3, 3, 3)
    assert DTypeParams("I", (4, 2)).series() == HSeries.of(3, 3)
    assert DTypeParams("IVb", ((1, 0, 0), (1, 2, 1), (1, 0, 0))).series() == HSeries.of(6, 3)


def test_classify_d_everything_in_small_classes(classes):
    for rank in (4, 5, 6):
        for q in classes[("D", rank)]:
            a = cached_algebra(q, 0)
            uni = hh_universal(hh1_dim(a), cartan(a).det)
            params = classify_D(q)
            assert params.series() == uni, (q, params)


def test_lookup_e_rows():
    assert lookup_E((1, -1, 0, 1, 0, -1, 1)) == HSeries.of()
    assert lookup_E((3, 0, 0, 3, 0, 0, 3)) == HSeries.of(4)
    assert lookup_E((8, 16, 0, 0, 16, 0, 0, 16, 8)) == HSeries.of(3, 3, 3)


def test_lookup_e_rejects_unknown():
    with pytest.raises(NotInTableError):
        lookup_E((1, 2, 3))


def test_table_shape():
    assert sum(len(rows) for rows in E_TABLE_ROWS.values()) == 35
    assert [len(E_TABLE_ROWS[r]) for r in (6, 7, 8)] == [6, 14, 15]
    for rank, rows in E_TABLE_ROWS.items():
        polys = [p for p, _ in rows]
        assert len(set(polys)) == len(polys), f"duplicate polynomial in rank {rank}"


def test_universal_examples():
    assert hh_universal(1, 3) == HSeries.of(4)
    assert hh_universal(0, 1) == HSeries.of()
    assert hh_universal(3, 8) == HSeries.of(3, 3, 3)


def test_closed_form_dispatch_examples():
    assert hh_closed_form(oriented_cycle(3)) == HSeries.of(3)
    assert hh_closed_form(oriented_cycle(6)) == HSeries.of(6)
    assert hh_closed_form(dynkin_seed("E", 6)) == HSeries.of()


def test_type_a_series_separate_triangle_counts(classes):
    # at fixed vertex count, distinct 3-cycle counts give distinct dim streams
    from cthh.fields import QQ, GF2, GF3, GF5
    from cthh.series import hh_dim

    streams = {}
    for q in classes[("A", 6)]:
        h = hh_type_A(q)
        t = len(h.cycle_orders)
        stream = tuple(hh_dim(h, i, fs) for fs in (QQ, GF2, GF3, GF5) for i in range(13))
        streams.setdefault(t, set()).add(stream)
    assert all(len(v) == 1 for v in streams.values())
    seen = [next(iter(v)) for _, v in sorted(streams.items())]
    assert len(set(seen)) == len(seen)


def test_closed_form_e6_f5_row(classes):
    # an E6-class quiver whose associated polynomial is 4(x^6+x^4+x^2+1)
    for q in classes[("E", 6)]:
        a = cached_algebra(q, 0)
        if cartan(a).assoc_poly == (4, 0, 4, 0, 4, 0, 4):
            assert hh_closed_form(q, "E", 6, algebra=a) == HSeries.of(5)
            break
    else:
        pytest.fail("no E6 quiver with the f_5 polynomial found")
