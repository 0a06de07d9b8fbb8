import itertools

import pytest

from oracles import all_relations, reflexive, symmetric, transitive
from relsem.classes import ModelClass, class_member, enumerate_class, enumerate_frames, legal_sets, pminus_ok
from relsem.kripke import CapExceeded, Frame, Model, is_proposition

CHAIN = Frame.from_pairs(2, [(0, 1)])


def test_tags_round_trip():
    for tag in ["kp", "tp", "bp", "v", "kb4p", "i", "o", "c", "p-", "re"]:
        assert ModelClass.from_tag(tag).value == tag
    assert ModelClass.from_tag("KB4p") is ModelClass.KB4p
    with pytest.raises(ValueError):
        ModelClass.from_tag("s4")


def test_membership_examples():
    assert class_member(Model.build(CHAIN, {"p": [1]}), ModelClass.Kp)
    v0 = Model.build(CHAIN, {"p": [0]})
    assert not class_member(v0, ModelClass.Kp)
    # brute force: R_box(-R_box(0) | {0}) = R_box({0}) = {1}, and {0} is not inside it
    assert not class_member(v0, ModelClass.Pminus)
    loop = Model.build(Frame.from_pairs(1, [(0, 0)]), {"p": [0]})
    assert class_member(loop, ModelClass.C)


def test_pminus_strictly_larger_than_kp():
    # found by enumeration: 1 -> 0 -> 0 with p true only at 1
    m = Model.build(Frame.from_pairs(2, [(0, 0), (1, 0)]), {"p": [1]})
    assert class_member(m, ModelClass.Pminus)
    assert not class_member(m, ModelClass.Kp)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_class(ModelClass.Kp, 1, ["p"])) == 4
    assert sum(1 for _ in enumerate_class(ModelClass.Re, 1, [])) == 1
    equivalences = sum(
        1 for rel in all_relations(2) if reflexive(2, rel) and symmetric(rel) and transitive(rel)
    )
    assert sum(1 for _ in enumerate_class(ModelClass.C, 2, [])) == equivalences == 2


@pytest.mark.parametrize("c", list(ModelClass))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_frame_enumeration_matches_oracle(c, n):
    conds = {
        "reflexive": lambda rel: reflexive(n, rel),
        "symmetric": symmetric,
        "transitive": transitive,
    }
    expected = sum(1 for rel in all_relations(n) if all(conds[k](rel) for k in c.conditions))
    assert sum(1 for _ in enumerate_frames(c, n)) == expected


@pytest.mark.parametrize("c", list(ModelClass))
def test_enumerated_models_are_members_and_exhaustive(c):
    atoms = ["p", "q"]
    got = list(enumerate_class(c, 2, atoms))
    assert len(set(got)) == len(got)
    assert all(class_member(m, c) for m in got)
    brute = 0
    for code in range(16):
        fr = Frame.from_code(2, code)
        for vp, vq in itertools.product(range(4), repeat=2):
            if class_member(Model(fr, (("p", vp), ("q", vq))), c):
                brute += 1
    assert brute == len(got)


def test_enumeration_caps():
    with pytest.raises(CapExceeded):
        list(enumerate_class(ModelClass.Kp, 5, []))
    with pytest.raises(CapExceeded):
        list(enumerate_class(ModelClass.Kp, 1, ["a", "b", "c", "d"]))


def test_containments_exhaustive():
    for n in (1, 2, 3):
        for m in enumerate_class(ModelClass.Kp, n, ["p"]):
            assert class_member(m, ModelClass.Pminus)
        for m in enumerate_class(ModelClass.Tp, n, ["p"]):
            assert class_member(m, ModelClass.Re)


def test_lattice_consistency():
    for n in (1, 2, 3):
        for code in range(1 << (n * n)):
            fr = Frame.from_code(n, code)
            for x in (0, 1, fr.full, fr.full >> 1):
                m = Model(fr, (("p", x),))
                c = class_member(m, ModelClass.C)
                assert c == (
                    class_member(m, ModelClass.I)
                    and class_member(m, ModelClass.O)
                    and class_member(m, ModelClass.KB4p)
                )


def test_legal_sets():
    assert legal_sets(CHAIN, ModelClass.Kp) == [x for x in range(4) if is_proposition(CHAIN, x)]
    assert legal_sets(CHAIN, ModelClass.Re) == [0, 1, 2, 3]
    assert legal_sets(CHAIN, ModelClass.Pminus) == [x for x in range(4) if pminus_ok(CHAIN, x)]
