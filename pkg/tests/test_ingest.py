import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyadic.errors import ParseError
from polyadic.ingest import (
    FilterSpec,
    TimedRelationTable,
    apply_filter,
    parse_relation_lines,
    parse_triple_files,
    read_triple_files,
    triple_paths,
    write_relation_lines,
    write_triple_files,
    yearly_slices,
)

TOY_TEXT = "a1 a2\na2 a4\na1 a2 a3\na3 a4"


def ints(xs):
    return "".join(f"{x}\n" for x in xs)


def test_triple_basic():
    t = parse_triple_files(ints([2, 3]), ints([7, 9, 7, 9, 12]), ints([2000, 2001]))
    assert t.labels.labels == ("7", "9", "12")
    assert t.rows == [(2000, (0, 1)), (2001, (0, 1, 2))]
    assert t.sizes.tolist() == [2, 3]


def test_triple_singleton():
    t = parse_triple_files("1\n", "5\n", "1999\n")
    assert t.rows == [(1999, (0,))]
    assert t.labels.labels == ("5",)


def test_triple_exhausted():
    with pytest.raises(ParseError, match="exhausted at nverts line 1"):
        parse_triple_files("2\n", "3\n", "0\n")


def test_triple_errors_name_lines():
    with pytest.raises(ParseError, match="nverts line 2"):
        parse_triple_files("1\n0\n", "1\n", "0\n0\n")
    with pytest.raises(ParseError, match="simplices line 2"):
        parse_triple_files("1\n1\n", "1\nx\n", "0\n0\n")
    with pytest.raises(ParseError, match="times has 1 lines"):
        parse_triple_files("1\n1\n", "1\n2\n", "0\n")
    with pytest.raises(ParseError, match="beyond the last relation"):
        parse_triple_files("1\n", "1\n2\n", "0\n")


def test_triple_duplicate_members_collapse(caplog):
    with caplog.at_level(logging.WARNING):
        t = parse_triple_files("3\n", "4\n4\n5\n", "0\n")
    assert t.rows == [(0, (0, 1))]
    assert t.duplicates_collapsed == 1
    assert "collapsed 1" in caplog.text


def test_crlf_accepted():
    a = parse_triple_files("2\r\n1\r\n", "1\r\n2\r\n3\r\n", "5\r\n6\r\n")
    b = parse_triple_files("2\n1\n", "1\n2\n3\n", "5\n6\n")
    assert a == b
    assert parse_relation_lines(TOY_TEXT.replace("\n", "\r\n")) == parse_relation_lines(TOY_TEXT)


def test_read_triple_files(tmp_path):
    prefix = tmp_path / "toy"
    for path, text in zip(triple_paths(prefix), ("2\n1\n", "8\n9\n8\n", "1\n2\n")):
        path.write_text(text)
    t = read_triple_files(prefix)
    assert t.rows == [(1, (0, 1)), (2, (0,))]


def test_relation_lines_toy():
    t = parse_relation_lines(TOY_TEXT)
    assert t.labels.labels == ("a1", "a2", "a4", "a3")
    named = [sorted(t.labels.labels[x] for x in rel) for _, rel in t]
    assert named == [["a1", "a2"], ["a2", "a4"], ["a1", "a2", "a3"], ["a3", "a4"]]
    assert t.times.tolist() == [0, 0, 0, 0]


def test_relation_lines_timestamp():
    t = parse_relation_lines("t=5 x y z")
    assert t.rows == [(5, (0, 1, 2))]
    with pytest.raises(ParseError, match="line 1"):
        parse_relation_lines("t=5")
    with pytest.raises(ParseError, match="line 2"):
        parse_relation_lines("a b\nt=x a")


def test_relation_lines_skip_blank():
    assert len(parse_relation_lines("\na b\n\n c \n")) == 2


def test_relation_lines_roundtrip():
    t = parse_relation_lines("t=3 p q\nt=1 q r s\n")
    assert parse_relation_lines(write_relation_lines(t, with_times=True)) == t


def test_filter_card_min():
    t = parse_relation_lines(TOY_TEXT)
    f = apply_filter(t, FilterSpec(card_min=3))
    assert len(f) == 1
    assert sorted(t.labels.labels[x] for x in f.relation(0)) == ["a1", "a2", "a3"]
    assert f.labels is t.labels


def test_filter_identity():
    t = parse_relation_lines(TOY_TEXT)
    assert apply_filter(t, FilterSpec()) == t


def test_filter_year():
    t = parse_triple_files(ints([1] * 17), ints(range(17)), ints(range(2000, 2017)))
    f = apply_filter(t, FilterSpec(time_min=2016, time_max=2016))
    assert f.times.tolist() == [2016]


def test_filter_dedup_keeps_first():
    t = parse_relation_lines("t=1 a b\nt=2 b a\nt=3 c\nt=4 a b")
    f = apply_filter(t, FilterSpec(dedup=True))
    assert f.times.tolist() == [1, 3]


def test_filter_spec_validation():
    with pytest.raises(ValueError):
        FilterSpec(time_min=3, time_max=2)
    with pytest.raises(ValueError):
        FilterSpec(card_min=3, card_max=2)


def test_yearly_slices():
    t = parse_relation_lines("t=2001 a\nt=2000 b c\nt=2000 d")
    sl = yearly_slices(t)
    assert [(y, len(s)) for y, s in sl] == [(2000, 2), (2001, 1)]
    assert yearly_slices(parse_relation_lines("")) == []
    one = parse_relation_lines("t=7 a b\nt=7 c")
    [(year, part)] = yearly_slices(one)
    assert year == 7 and part == one


# ---------------------------------------------------------------- properties

rows_strategy = st.lists(
    st.tuples(st.integers(1990, 1995), st.lists(st.integers(0, 30), min_size=1, max_size=6)),
    max_size=25)


def table_of(rows) -> TimedRelationTable:
    return parse_triple_files(ints([len(r) for _, r in rows]),
                              ints([x for _, r in rows for x in r]),
                              ints([t for t, _ in rows]))


bound = st.one_of(st.none(), st.integers(0, 8))
year = st.one_of(st.none(), st.integers(1989, 1996))


def spec_strategy():
    return st.builds(
        lambda a, b, c, d: FilterSpec(*sorted_pair(a, b), *sorted_pair(c, d)),
        year, year, bound, bound)


def sorted_pair(a, b):
    if a is not None and b is not None and a > b:
        return b, a
    return a, b


@settings(max_examples=150, deadline=None)
@given(rows_strategy)
def test_triple_roundtrip(rows):
    t = table_of(rows)
    assert parse_triple_files(*write_triple_files(t)) == t


@settings(max_examples=150, deadline=None)
@given(rows_strategy, spec_strategy(), spec_strategy())
def test_filter_composition(rows, f, g):
    t = table_of(rows)
    once = apply_filter(t, f)
    assert len(once) <= len(t)
    twice = apply_filter(once, g)
    assert twice == apply_filter(t, f.intersect(g))
    assert twice.labels == t.labels


@settings(max_examples=100, deadline=None)
@given(rows_strategy)
def test_slices_partition(rows):
    t = table_of(rows)
    seen = []
    for y, part in yearly_slices(t):
        assert set(part.times.tolist()) == {y}
        assert part.labels == t.labels
        seen.extend(zip(part.times.tolist(), map(part.relation, range(len(part)))))
    assert sorted(seen) == sorted(t.rows)
    assert len(seen) == len(t)


@settings(max_examples=100, deadline=None)
@given(rows_strategy)
def test_dedup_filter_is_idempotent(rows):
    t = table_of(rows)
    d = apply_filter(t, FilterSpec(dedup=True))
    assert apply_filter(d, FilterSpec(dedup=True)) == d
    assert len({r for _, r in d}) == len(d) == len({r for _, r in t})


def test_take_preserves_rows():
    t = parse_relation_lines("a b\nc\nd e f\ng")
    sub = t.take(np.array([2, 0]))
    assert sub.rows == [(0, t.relation(2)), (0, t.relation(0))]


def test_write_triple_requires_integer_labels():
    with pytest.raises(ValueError, match="not an integer"):
        write_triple_files(parse_relation_lines("a b"))
