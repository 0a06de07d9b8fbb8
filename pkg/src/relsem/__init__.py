"""Relational semantics with strict implication: Kripke models whose atoms
denote propositions, eight sequent systems, countermodel search, unravelling."""

from .classes import ModelClass, class_member, enumerate_class
from .consequence import (
    Countermodel,
    ValidUpTo,
    semantic_consequence,
    sequent_true_at,
    sequent_valid_in_model,
    soundness_audit,
)
from .formula import And, Atom, Bottom, Box, Imp, imp_depth, parse, to_text, translate_modal
from .kripke import Frame, Model, PointedModel, extension, is_interpretation, is_proposition, propositions, satisfies
from .search import SearchConfig, prove
from .sequents import Derivation, Rule, Sequent, SYSTEMS, check_derivation, check_step, expand_derived
from .unravel import unravel

__all__ = [
    "And", "Atom", "Bottom", "Box", "Countermodel", "Derivation", "Frame", "Imp", "Model", "ModelClass",
    "PointedModel", "Rule", "SYSTEMS", "SearchConfig", "Sequent", "ValidUpTo", "check_derivation",
    "check_step", "class_member", "enumerate_class", "expand_derived", "extension", "imp_depth",
    "is_interpretation", "is_proposition", "parse", "propositions", "prove", "satisfies",
    "semantic_consequence", "sequent_true_at", "sequent_valid_in_model", "soundness_audit", "to_text",
    "translate_modal", "unravel",
]
