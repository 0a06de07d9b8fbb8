import pytest

from corpus import NEGATIVE, POSITIVE
from relsem.classes import ModelClass
from relsem.consequence import SYSTEM_CLASS, Countermodel, ValidUpTo, semantic_consequence, soundness_audit
from relsem.formula import Atom, neg
from relsem.search import SearchConfig, prove, witness_candidates
from relsem.sequents import SYSTEMS, Rule, check_derivation, parse_sequent


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig("Kp", max_depth=0)
    with pytest.raises(ValueError):
        SearchConfig("Kp", formula_size_cap=0)
    with pytest.raises(ValueError):
        SearchConfig("S4")
    assert SearchConfig("kb4p").system is SYSTEMS["KB4p"]


@pytest.mark.parametrize("tag", sorted(SYSTEMS))
def test_identity_is_one_imp0_node(tag):
    d = prove(parse_sequent("; p -> p"), SearchConfig(tag, max_depth=1))
    assert d.rule is Rule.Imp0 and not d.premises


def test_prop_sy_found_at_depth_one():
    s = parse_sequent("p ; ((p -> _|_) -> _|_) -> p")
    d = prove(s, SearchConfig("O", max_depth=1))
    assert d.rule is Rule.PropSy and d.conclusion == s


def test_and_projection_uses_deduction_steps():
    s = parse_sequent("; p & q -> p")
    d = prove(s, SearchConfig("Kp", max_depth=4))
    assert d is not None and d.conclusion == s
    used = d.rules_used()
    assert Rule.AndE_L in used and {Rule.Imp1, Rule.Imp0, Rule.Cut} <= used
    check_derivation(d, "Kp")


def test_witness_candidates_close_under_negation():
    s = parse_sequent("p -> q ; q")
    cands = witness_candidates(s, 12)
    p, q = Atom("p"), Atom("q")
    for f in (p, q, neg(p), neg(q)):
        assert f in cands
    assert witness_candidates(s, 1) == [p, q]


@pytest.mark.parametrize("tag, text", POSITIVE)
def test_positive_corpus(tag, text):
    s = parse_sequent(text)
    d = prove(s, SearchConfig(tag, max_depth=6))
    assert d is not None, f"{text} not found in {tag}"
    assert d.conclusion == s
    check_derivation(d, tag)
    assert soundness_audit(d, tag, 2) == ValidUpTo(2)


@pytest.mark.parametrize("tag, text", NEGATIVE)
def test_negative_corpus_has_countermodels(tag, text):
    s = parse_sequent(text)
    assert prove(s, SearchConfig(tag, max_depth=6)) is None
    assert isinstance(semantic_consequence(s, SYSTEM_CLASS[tag], 3), Countermodel)


@pytest.mark.parametrize("tag, text", POSITIVE[:12])
def test_pruning_does_not_change_success(tag, text):
    s = parse_sequent(text)
    plain = prove(s, SearchConfig(tag, prune_worlds=0))
    assert plain is not None
    check_derivation(plain, tag)


def test_search_is_deterministic():
    s = parse_sequent("p -> q, q -> r ; p -> r")
    cfg = SearchConfig("Kp")
    assert prove(s, cfg) == prove(s, cfg)


def test_missing_rule_fails_fast():
    s = parse_sequent("p, p -> q ; q")
    for tag in ("Kp", "Bp", "V", "KB4p"):
        assert prove(s, SearchConfig(tag)) is None
    for tag in ("Tp", "I", "O", "C"):
        assert prove(s, SearchConfig(tag, max_depth=1)).rule in (Rule.Refl, Rule.Mon)


def test_system_class_table():
    assert SYSTEM_CLASS["KB4p"] is ModelClass.KB4p
    assert set(SYSTEM_CLASS) == set(SYSTEMS)
