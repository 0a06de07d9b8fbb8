"""Truth and validity of sequents, and bounded search for countermodels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .classes import MAX_ENUM_WORLDS, ModelClass, enumerate_class
from .formula import atoms as formula_atoms
from .kripke import CapExceeded, Model, extension, members
from .sequents import Derivation, ProofSystem, Sequent, check_derivation, get_system

# proof system tag -> class its derivations are checked against
SYSTEM_CLASS = {
    "Kp": ModelClass.Kp,
    "Tp": ModelClass.Tp,
    "Bp": ModelClass.Bp,
    "V": ModelClass.V,
    "KB4p": ModelClass.KB4p,
    "I": ModelClass.I,
    "O": ModelClass.O,
    "C": ModelClass.C,
}


@dataclass(frozen=True)
class ValidUpTo:
    """No countermodel among class members with at most ``max_worlds`` worlds."""

    max_worlds: int
    valid = True


@dataclass(frozen=True)
class Countermodel:
    model: Model
    point: int
    valid = False


Verdict = ValidUpTo | Countermodel


def refuting_worlds(m: Model, s: Sequent) -> int:
    """World set where every context formula holds and the goal fails."""
    cache: dict = {}
    mask = m.frame.full
    for f in s.ctx:
        mask &= extension(m, f, cache)
        if not mask:
            return 0
    return mask & ~extension(m, s.goal, cache)


def sequent_true_at(m: Model, w: int, s: Sequent) -> bool:
    m.frame.check_world(w)
    return not (refuting_worlds(m, s) >> w & 1)


def sequent_valid_in_model(m: Model, s: Sequent) -> bool:
    return refuting_worlds(m, s) == 0


def sequent_atoms(s: Sequent) -> set[str]:
    out = formula_atoms(s.goal)
    for f in s.ctx:
        out |= formula_atoms(f)
    return out


def class_models(c: ModelClass, max_worlds: int, atoms: Sequence[str]) -> Iterable[Model]:
    """Class members with 1..max_worlds worlds, in enumeration order."""
    for n in range(1, max_worlds + 1):
        yield from enumerate_class(c, n, atoms)


def semantic_consequence(
    s: Sequent, c: ModelClass | str, max_worlds: int, atoms: Sequence[str] | None = None
) -> Verdict:
    """First countermodel in enumeration order, or :class:`ValidUpTo`."""
    if isinstance(c, str):
        c = ModelClass.from_tag(c)
    if not 1 <= max_worlds <= MAX_ENUM_WORLDS:
        raise CapExceeded(f"max_worlds must be in 1..{MAX_ENUM_WORLDS}, got {max_worlds}")
    needed = sequent_atoms(s)
    atoms = sorted(needed) if atoms is None else list(atoms)
    uncovered = needed - set(atoms)
    if uncovered:
        raise ValueError(f"atoms {sorted(uncovered)} occur in the sequent but are not enumerated")
    for m in class_models(c, max_worlds, atoms):
        bad = refuting_worlds(m, s)
        if bad:
            return Countermodel(m, members(bad)[0])
    return ValidUpTo(max_worlds)


class SoundnessViolation(AssertionError):
    """A checked derivation has a countermodel in its class."""

    def __init__(self, derivation: Derivation, system: ProofSystem, verdict: Countermodel):
        super().__init__(
            f"{system.tag}-derivable sequent {derivation.conclusion} refuted at world "
            f"{verdict.point} of {verdict.model}"
        )
        self.verdict = verdict


def soundness_audit(d: Derivation, system: ProofSystem | str, max_worlds: int = 3) -> ValidUpTo:
    """Check ``d`` in ``system``, then search the matching class for a
    countermodel to its conclusion.

    Raises :class:`~relsem.sequents.DerivationError` if ``d`` does not check
    and :class:`SoundnessViolation` if a countermodel turns up.
    """
    system = get_system(system)
    check_derivation(d, system)
    verdict = semantic_consequence(d.conclusion, SYSTEM_CLASS[system.tag], max_worlds)
    if isinstance(verdict, Countermodel):
        raise SoundnessViolation(d, system, verdict)
    return verdict
