"""The eight interpretation classes plus the P-minus and reflexive model classes."""

from __future__ import annotations

import enum
import itertools
from typing import Iterator, Sequence

from .kripke import (
    REFLEXIVE,
    SYMMETRIC,
    TRANSITIVE,
    CapExceeded,
    Frame,
    Model,
    frame_has,
    is_interpretation,
    is_proposition,
    r_box,
)

MAX_ENUM_WORLDS = 4
MAX_ENUM_ATOMS = 3


class ModelClass(enum.Enum):
    Kp = "kp"
    Tp = "tp"
    Bp = "bp"
    V = "v"
    KB4p = "kb4p"
    I = "i"  # noqa: E741
    O = "o"  # noqa: E741
    C = "c"
    Pminus = "p-"
    Re = "re"

    @classmethod
    def from_tag(cls, tag: str) -> "ModelClass":
        try:
            return cls(tag.lower())
        except ValueError:
            try:
                return cls[tag]
            except KeyError:
                raise ValueError(f"unknown class tag {tag!r}") from None

    @property
    def conditions(self) -> frozenset[str]:
        return _CONDITIONS[self]

    @property
    def valuation_rule(self) -> str:
        """One of ``"interpretation"``, ``"p-"`` or ``"none"``."""
        if self is ModelClass.Pminus:
            return "p-"
        if self is ModelClass.Re:
            return "none"
        return "interpretation"


_CONDITIONS = {
    ModelClass.Kp: frozenset(),
    ModelClass.Tp: frozenset({REFLEXIVE}),
    ModelClass.Bp: frozenset({SYMMETRIC}),
    ModelClass.V: frozenset({TRANSITIVE}),
    ModelClass.KB4p: frozenset({SYMMETRIC, TRANSITIVE}),
    ModelClass.I: frozenset({REFLEXIVE, TRANSITIVE}),
    ModelClass.O: frozenset({REFLEXIVE, SYMMETRIC}),
    ModelClass.C: frozenset({REFLEXIVE, SYMMETRIC, TRANSITIVE}),
    ModelClass.Pminus: frozenset(),
    ModelClass.Re: frozenset({REFLEXIVE}),
}


def pminus_ok(fr: Frame, x: int) -> bool:
    """``x <= R_box(-R_box(empty) | x)``."""
    return x & ~r_box(fr, fr.full & (~r_box(fr, 0) | x)) == 0


def frame_member(fr: Frame, c: ModelClass) -> bool:
    return all(frame_has(fr, cond) for cond in c.conditions)


def class_member(m: Model, c: ModelClass) -> bool:
    if not frame_member(m.frame, c):
        return False
    rule = c.valuation_rule
    if rule == "interpretation":
        return is_interpretation(m)
    if rule == "p-":
        return all(pminus_ok(m.frame, x) for _, x in m.valuation)
    return True


def legal_sets(fr: Frame, c: ModelClass) -> list[int]:
    """World sets the class allows as the value of an atom, ascending."""
    rule = c.valuation_rule
    everything = range(1 << fr.size)
    if rule == "interpretation":
        return [x for x in everything if is_proposition(fr, x)]
    if rule == "p-":
        return [x for x in everything if pminus_ok(fr, x)]
    return list(everything)


def enumerate_frames(c: ModelClass, n_worlds: int) -> Iterator[Frame]:
    """Frames of exactly ``n_worlds`` worlds meeting the class's conditions,
    by ascending relation code."""
    if not 1 <= n_worlds <= MAX_ENUM_WORLDS:
        raise CapExceeded(f"n_worlds must be in 1..{MAX_ENUM_WORLDS}, got {n_worlds}")
    for code in range(1 << (n_worlds * n_worlds)):
        fr = Frame.from_code(n_worlds, code)
        if frame_member(fr, c):
            yield fr


def enumerate_class(c: ModelClass, n_worlds: int, atoms: Sequence[str]) -> Iterator[Model]:
    """Every class member with ``n_worlds`` worlds valuing exactly ``atoms``.

    Order: relation code, then valuations lexicographically in ``atoms``
    order with each atom's sets ascending.
    """
    atoms = list(atoms)
    if len(atoms) > MAX_ENUM_ATOMS:
        raise CapExceeded(f"at most {MAX_ENUM_ATOMS} atoms, got {len(atoms)}")
    if len(set(atoms)) != len(atoms):
        raise ValueError("duplicate atom names")
    for fr in enumerate_frames(c, n_worlds):
        sets = legal_sets(fr, c)
        for combo in itertools.product(sets, repeat=len(atoms)):
            yield Model(fr, tuple(zip(atoms, combo)))
