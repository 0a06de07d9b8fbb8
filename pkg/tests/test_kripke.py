import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import box, formula_corpus, image, inverse_image, modal_satisfies, pairs_of, to_mask
from relsem.formula import BOT, And, Atom, Imp, parse, translate_modal
from relsem.kripke import (
    REFLEXIVE,
    SYMMETRIC,
    TRANSITIVE,
    BoundError,
    CapExceeded,
    Frame,
    Model,
    ModelFormatError,
    extension,
    frame_has,
    is_interpretation,
    is_proposition,
    members,
    model_from_dict,
    model_to_dict,
    propositions,
    r_box,
    r_diamond,
    r_image,
    satisfies,
)

CHAIN = Frame.from_pairs(2, [(0, 1)])
LOOP = Frame.from_pairs(1, [(0, 0)])
DEAD = Frame.from_pairs(1, [])
TOTAL2 = Frame.from_pairs(2, [(0, 0), (0, 1), (1, 0), (1, 1)])
p, q = Atom("p"), Atom("q")


def test_r_image_examples():
    assert r_image(CHAIN, 0b01) == 0b10
    assert r_image(CHAIN, 0) == 0
    assert r_image(TOTAL2, 0) == 0
    assert r_image(LOOP, 0b1) == 0b1


def test_r_box_examples():
    assert r_box(CHAIN, 0) == 0b10
    assert r_box(CHAIN, 0b10) == 0b11
    assert r_box(LOOP, 0) == 0


def test_r_diamond_examples():
    assert r_diamond(CHAIN, 0b10) == 0b01
    assert r_diamond(CHAIN, 0b01) == 0
    assert r_diamond(TOTAL2, 0) == 0


def test_is_proposition_examples():
    assert not is_proposition(CHAIN, 0b01)
    assert is_proposition(CHAIN, 0b10)
    for fr in (CHAIN, LOOP, DEAD, TOTAL2):
        assert is_proposition(fr, 0)
        assert is_proposition(fr, fr.full)


def test_propositions_examples():
    assert propositions(CHAIN) == [0, 0b10, 0b11]
    assert propositions(TOTAL2) == [0, 0b11]
    assert propositions(DEAD) == [0, 0b1]


def test_propositions_cap():
    big = Frame.from_pairs(17, [])
    with pytest.raises(CapExceeded):
        propositions(big)
    assert len(propositions(Frame.from_pairs(3, []), cap=3)) == 8


def test_bound_violations():
    with pytest.raises(BoundError):
        r_image(CHAIN, 0b100)
    with pytest.raises(BoundError):
        r_box(CHAIN, -1)
    with pytest.raises(BoundError):
        satisfies(Model.build(CHAIN), 2, p)
    with pytest.raises(BoundError):
        Frame.from_pairs(2, [(0, 2)])
    with pytest.raises(BoundError):
        Frame.from_pairs(0, [])


def test_satisfies_examples():
    chain = Model.build(CHAIN, {"p": [1]})
    assert not satisfies(chain, 0, Imp(p, q))
    dead = Model.build(DEAD, {"p": [0]})
    assert satisfies(dead, 0, Imp(p, q))
    for m in (chain, dead):
        for w in range(m.size):
            assert satisfies(m, w, Imp(And(p, q), And(p, q)))
            assert not satisfies(m, w, BOT)


def test_extension_examples():
    chain = Model.build(CHAIN, {"p": [1]})
    assert extension(chain, Imp(p, q)) == 0b10
    assert extension(chain, BOT) == 0
    assert extension(chain, p) == 0b10
    assert extension(chain, q) == 0


def test_frame_conditions():
    assert not frame_has(CHAIN, REFLEXIVE)
    assert frame_has(Frame.from_pairs(2, [(0, 1), (1, 0)]), SYMMETRIC)
    assert not frame_has(Frame.from_pairs(3, [(0, 1), (1, 2)]), TRANSITIVE)
    assert frame_has(Frame.from_pairs(3, [(0, 1), (1, 2), (0, 2)]), TRANSITIVE)
    with pytest.raises(ValueError):
        frame_has(CHAIN, "euclidean")


def test_is_interpretation_examples():
    assert is_interpretation(Model.build(CHAIN, {"p": [1]}))
    assert not is_interpretation(Model.build(CHAIN, {"p": [0]}))
    assert is_interpretation(Model.build(CHAIN))


def test_model_json_round_trip():
    m = Model.build(Frame.from_pairs(3, [(0, 1), (1, 2), (2, 2)]), {"p": [1, 2], "q": []})
    assert model_from_dict(json.loads(json.dumps(model_to_dict(m)))) == m


@pytest.mark.parametrize(
    "bad",
    [
        {"worlds": 2, "rel": [[0, 1], [0, 1]], "val": {}},
        {"worlds": 2, "rel": [[0, 2]], "val": {}},
        {"worlds": 2, "rel": [], "val": {"p": [3]}},
        {"worlds": 0, "rel": [], "val": {}},
        {"rel": [], "val": {}},
        {"worlds": 2, "rel": [[0]], "val": {}},
    ],
)
def test_model_json_rejects(bad):
    with pytest.raises(ModelFormatError):
        model_from_dict(bad)


# --------------------------------------------------------------------------
# random-frame properties against the set-based oracle

@st.composite
def frames(draw, max_worlds=5):
    n = draw(st.integers(1, max_worlds))
    cells = [(s, t) for s in range(n) for t in range(n)]
    rel = draw(st.sets(st.sampled_from(cells)))
    return Frame.from_pairs(n, rel)


@st.composite
def frame_and_sets(draw):
    fr = draw(frames())
    x = draw(st.integers(0, fr.full))
    y = draw(st.integers(0, fr.full))
    return fr, x, y


@settings(max_examples=300, deadline=None)
@given(frame_and_sets())
def test_operators_agree_with_set_oracle(args):
    fr, x, y = args
    rel, xs = pairs_of(fr), set(members(x))
    assert r_image(fr, x) == to_mask(image(rel, xs))
    assert r_box(fr, x) == to_mask(box(fr.size, rel, xs))
    assert r_diamond(fr, x) == to_mask(inverse_image(rel, xs))


@settings(max_examples=300, deadline=None)
@given(frame_and_sets())
def test_ope_laws_random(args):
    fr, x, y = args
    assert r_image(fr, x & y) & ~(r_image(fr, x) & r_image(fr, y)) == 0
    assert r_box(fr, x & y) == r_box(fr, x) & r_box(fr, y)
    if x & ~y == 0:
        assert r_box(fr, x) & ~r_box(fr, y) == 0
    assert (r_image(fr, x) & ~y == 0) == (x & ~r_box(fr, y) == 0)


@settings(max_examples=300, deadline=None)
@given(frame_and_sets())
def test_pro_laws_random(args):
    fr, x, y = args
    if is_proposition(fr, x) and is_proposition(fr, y):
        assert is_proposition(fr, x & y)
    assert is_proposition(fr, r_box(fr, x))
    if is_proposition(fr, x):
        assert x & ~r_box(fr, fr.full & (~r_box(fr, 0) | x)) == 0


FORMULAS = formula_corpus(seed=7, count=40, max_size=8)


@st.composite
def models(draw, max_worlds=4):
    fr = draw(frames(max_worlds))
    return Model.build(fr, {"p": draw(st.integers(0, fr.full)), "q": draw(st.integers(0, fr.full))})


@settings(max_examples=150, deadline=None)
@given(models())
def test_extension_matches_pointwise(m):
    for f in FORMULAS:
        assert extension(m, f) == sum(1 << w for w in range(m.size) if satisfies(m, w, f))


@settings(max_examples=150, deadline=None)
@given(models())
def test_modal_translation_agrees(m):
    for f in FORMULAS:
        g = translate_modal(f)
        for w in range(m.size):
            assert satisfies(m, w, f) == modal_satisfies(m, w, g)


def test_parse_integration():
    m = Model.build(CHAIN, {"p": [1]})
    assert satisfies(m, 1, parse("(p -> _|_) -> _|_"))
