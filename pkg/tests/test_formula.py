import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relsem.formula import (
    BOT,
    And,
    Atom,
    Box,
    FormulaSyntaxError,
    Imp,
    box_depth,
    count_nodes,
    imp_depth,
    parse,
    to_text,
    translate_modal,
)

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("p & q -> r", Imp(And(p, q), r)),
        ("p -> q -> r", Imp(p, Imp(q, r))),
        ("(_|_ -> _|_) -> p", Imp(Imp(BOT, BOT), p)),
        ("p & q & r", And(And(p, q), r)),
        ("p & (q & r)", And(p, And(q, r))),
        ("(p -> q) -> r", Imp(Imp(p, q), r)),
        ("bot -> p", Imp(BOT, p)),
        ("  x_1 &Y2->z ", Imp(And(Atom("x_1"), Atom("Y2")), Atom("z"))),
    ],
)
def test_parse(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "f, text",
    [
        (Imp(And(p, q), r), "p & q -> r"),
        (BOT, "_|_"),
        (And(And(p, q), r), "p & q & r"),
        (And(p, And(q, r)), "p & (q & r)"),
        (Imp(Imp(p, q), r), "(p -> q) -> r"),
        (Imp(p, Imp(q, r)), "p -> q -> r"),
        (And(Imp(p, q), r), "(p -> q) & r"),
    ],
)
def test_print(f, text):
    assert to_text(f) == text


@pytest.mark.parametrize(
    "text, pos",
    [("p ->", 4), ("(p & q", 6), ("p q", 2), ("p $ q", 2), ("", 0), ("& p", 0), ("p)", 1)],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(FormulaSyntaxError) as info:
        parse(text)
    assert info.value.pos == pos


def test_unknown_token_is_named():
    with pytest.raises(FormulaSyntaxError, match="unknown token '\\$'"):
        parse("p $ q")


def test_translate_examples():
    assert translate_modal(p) == p
    assert translate_modal(Imp(p, BOT)) == Box(Imp(p, BOT))
    assert translate_modal(Imp(p, Imp(q, r))) == Box(Imp(p, Box(Imp(q, r))))
    assert to_text(translate_modal(parse("p -> _|_"))) == "[](p -> _|_)"


def test_imp_depth_examples():
    assert imp_depth(p) == 0
    assert imp_depth(Imp(p, q)) == 1
    assert imp_depth(Imp(Imp(p, BOT), BOT)) == 2


def test_structural_equality_and_hash():
    a = parse("(p -> q) & r")
    b = And(Imp(Atom("p"), Atom("q")), Atom("r"))
    assert a == b and hash(a) == hash(b)
    assert len({a, b, parse("r & (p -> q)")}) == 2


def formulas(max_leaves=6):
    leaves = st.sampled_from([p, q, r, BOT])
    return st.recursive(
        leaves,
        lambda kids: st.builds(And, kids, kids) | st.builds(Imp, kids, kids),
        max_leaves=max_leaves,
    )


@settings(max_examples=300, deadline=None)
@given(formulas())
def test_round_trip(f):
    assert parse(to_text(f)) == f


@settings(max_examples=200, deadline=None)
@given(formulas())
def test_box_count_matches_imp_count(f):
    m = translate_modal(f)
    assert count_nodes(m, Box) == count_nodes(f, Imp)
    assert box_depth(m) == imp_depth(f)


@settings(max_examples=200, deadline=None)
@given(formulas())
def test_every_translated_implication_is_boxed(f):
    from relsem.formula import subformulas

    m = translate_modal(f)
    boxed = {id(g.inner) for g in subformulas(m) if isinstance(g, Box)}
    assert all(id(g) in boxed for g in subformulas(m) if isinstance(g, Imp))
