"""Finite frames and models.

Worlds are the integers ``0..size-1`` and a world set is an ``int`` bitmask
(bit ``w`` set iff world ``w`` is a member).  The relation is kept as one
successor mask per world.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .formula import And, Atom, Bottom, Formula, Imp

PROPOSITION_CAP = 16

REFLEXIVE = "reflexive"
SYMMETRIC = "symmetric"
TRANSITIVE = "transitive"
CONDITIONS = (REFLEXIVE, SYMMETRIC, TRANSITIVE)


class BoundError(ValueError):
    """A world or world set does not fit the frame it is used with."""


class CapExceeded(ValueError):
    """An enumeration was asked for more than its configured cap."""


class ModelFormatError(ValueError):
    """Malformed model JSON."""


def worldset(worlds: Iterable[int]) -> int:
    mask = 0
    for w in worlds:
        mask |= 1 << w
    return mask


def members(mask: int) -> list[int]:
    out = []
    w = 0
    while mask:
        if mask & 1:
            out.append(w)
        mask >>= 1
        w += 1
    return out


@dataclass(frozen=True)
class Frame:
    size: int
    succ: tuple[int, ...]

    def __post_init__(self):
        if self.size < 1:
            raise BoundError("a frame needs at least one world")
        if len(self.succ) != self.size:
            raise BoundError("one successor mask per world required")
        for m in self.succ:
            if m < 0 or m >> self.size:
                raise BoundError(f"successor mask {m:#b} exceeds {self.size} worlds")

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "Frame":
        if size < 1:
            raise BoundError("a frame needs at least one world")
        succ = [0] * size
        for s, t in pairs:
            if not (0 <= s < size and 0 <= t < size):
                raise BoundError(f"pair ({s}, {t}) outside 0..{size - 1}")
            succ[s] |= 1 << t
        return cls(size, tuple(succ))

    @classmethod
    def from_code(cls, size: int, code: int) -> "Frame":
        """Frame whose relation has bit ``s*size + t`` of ``code`` for ``sRt``."""
        full = (1 << size) - 1
        return cls(size, tuple((code >> (s * size)) & full for s in range(size)))

    @property
    def code(self) -> int:
        return sum(m << (s * self.size) for s, m in enumerate(self.succ))

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def pairs(self) -> list[tuple[int, int]]:
        return [(s, t) for s in range(self.size) for t in members(self.succ[s])]

    def related(self, s: int, t: int) -> bool:
        return bool(self.succ[s] >> t & 1)

    def check(self, x: int) -> int:
        if x < 0 or x >> self.size:
            raise BoundError(f"world set {x:#b} exceeds {self.size} worlds")
        return x

    def check_world(self, w: int) -> int:
        if not 0 <= w < self.size:
            raise BoundError(f"world {w} outside 0..{self.size - 1}")
        return w


@dataclass(frozen=True)
class Model:
    frame: Frame
    valuation: tuple[tuple[str, int], ...] = ()
    _val: dict = field(default=None, init=False, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = [a for a, _ in self.valuation]
        if len(set(names)) != len(names):
            raise ModelFormatError("atom valued twice")
        for _, x in self.valuation:
            self.frame.check(x)
        object.__setattr__(self, "valuation", tuple(sorted(self.valuation)))
        object.__setattr__(self, "_val", dict(self.valuation))

    @classmethod
    def build(cls, frame: Frame, valuation: Mapping[str, Iterable[int] | int] | None = None) -> "Model":
        items = []
        for atom, xs in (valuation or {}).items():
            items.append((atom, xs if isinstance(xs, int) else worldset(xs)))
        return cls(frame, tuple(items))

    def value(self, atom: str) -> int:
        """Unmapped atoms denote the empty set."""
        return self._val.get(atom, 0)

    @property
    def size(self) -> int:
        return self.frame.size


@dataclass(frozen=True)
class PointedModel:
    model: Model
    point: int

    def __post_init__(self):
        self.model.frame.check_world(self.point)


# --------------------------------------------------------------------------
# operators on world sets

def r_image(fr: Frame, x: int) -> int:
    """Successors of members of ``x``."""
    fr.check(x)
    out = 0
    w = 0
    while x:
        if x & 1:
            out |= fr.succ[w]
        x >>= 1
        w += 1
    return out


def r_box(fr: Frame, x: int) -> int:
    """Worlds all of whose successors lie in ``x`` (dead ends included)."""
    fr.check(x)
    out = 0
    for w, m in enumerate(fr.succ):
        if m & ~x == 0:
            out |= 1 << w
    return out


def r_diamond(fr: Frame, x: int) -> int:
    """Dual of :func:`r_box`: worlds with some successor in ``x``."""
    fr.check(x)
    return fr.full & ~r_box(fr, fr.full & ~x)


def is_proposition(fr: Frame, x: int) -> bool:
    img = r_image(fr, x)
    return img & r_box(fr, img) & ~x == 0


def propositions(fr: Frame, cap: int = PROPOSITION_CAP) -> list[int]:
    """All propositions of ``fr`` in ascending bitmask order."""
    if fr.size > cap:
        raise CapExceeded(f"{fr.size} worlds exceeds proposition enumeration cap {cap}")
    return [x for x in range(1 << fr.size) if is_proposition(fr, x)]


def frame_has(fr: Frame, condition: str) -> bool:
    n = fr.size
    if condition == REFLEXIVE:
        return all(fr.succ[w] >> w & 1 for w in range(n))
    if condition == SYMMETRIC:
        return all(fr.related(t, s) for s in range(n) for t in members(fr.succ[s]))
    if condition == TRANSITIVE:
        return all(fr.succ[t] & ~fr.succ[s] == 0 for s in range(n) for t in members(fr.succ[s]))
    raise ValueError(f"unknown frame condition {condition!r}")


def is_interpretation(m: Model) -> bool:
    return all(is_proposition(m.frame, x) for _, x in m.valuation)


# --------------------------------------------------------------------------
# satisfaction

def satisfies(m: Model, w: int, f: Formula) -> bool:
    """Pointwise truth of ``f`` at world ``w``, by recursion on ``f``."""
    m.frame.check_world(w)
    return _sat(m, w, f)


def _sat(m: Model, w: int, f: Formula) -> bool:
    if isinstance(f, Atom):
        return bool(m.value(f.name) >> w & 1)
    if isinstance(f, Bottom):
        return False
    if isinstance(f, And):
        return _sat(m, w, f.left) and _sat(m, w, f.right)
    if isinstance(f, Imp):
        for t in members(m.frame.succ[w]):
            if _sat(m, t, f.left) and not _sat(m, t, f.right):
                return False
        return True
    raise TypeError(f"not a propositional formula: {f!r}")


def extension(m: Model, f: Formula, cache: dict | None = None) -> int:
    """The set of worlds where ``f`` holds, computed bottom-up on world sets.

    ``cache`` may be shared across calls on the same model.
    """
    if cache is None:
        cache = {}
    return _ext(m, f, cache)


def _ext(m: Model, f: Formula, cache: dict) -> int:
    hit = cache.get(f)
    if hit is not None:
        return hit
    if isinstance(f, Atom):
        out = m.value(f.name)
    elif isinstance(f, Bottom):
        out = 0
    elif isinstance(f, And):
        out = _ext(m, f.left, cache) & _ext(m, f.right, cache)
    elif isinstance(f, Imp):
        fr = m.frame
        out = r_box(fr, fr.full & (~_ext(m, f.left, cache) | _ext(m, f.right, cache)))
    else:
        raise TypeError(f"not a propositional formula: {f!r}")
    cache[f] = out
    return out


# --------------------------------------------------------------------------
# JSON

def model_to_dict(m: Model) -> dict:
    return {
        "worlds": m.frame.size,
        "rel": [[s, t] for s, t in m.frame.pairs()],
        "val": {a: members(x) for a, x in m.valuation},
    }


def model_from_dict(d: Mapping) -> Model:
    try:
        n = d["worlds"]
        rel = d.get("rel", [])
        val = d.get("val", {})
    except (TypeError, KeyError) as exc:
        raise ModelFormatError(f"model needs 'worlds', 'rel', 'val': {exc}") from exc
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ModelFormatError("'worlds' must be a positive integer")
    pairs = []
    for pair in rel:
        if not (isinstance(pair, (list, tuple)) and len(pair) == 2 and all(isinstance(v, int) for v in pair)):
            raise ModelFormatError(f"bad relation pair {pair!r}")
        pairs.append((pair[0], pair[1]))
    if len(set(pairs)) != len(pairs):
        raise ModelFormatError("duplicate relation pair")
    try:
        frame = Frame.from_pairs(n, pairs)
    except BoundError as exc:
        raise ModelFormatError(str(exc)) from exc
    if not isinstance(val, Mapping):
        raise ModelFormatError("'val' must map atoms to world lists")
    items = []
    for atom, ws in val.items():
        if not all(isinstance(w, int) and 0 <= w < n for w in ws):
            raise ModelFormatError(f"valuation of {atom!r} references a world outside 0..{n - 1}")
        items.append((atom, worldset(ws)))
    return Model(frame, tuple(items))


def load_model(path) -> Model:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"invalid JSON: {exc}") from exc
    return model_from_dict(data)


def dump_model(m: Model) -> str:
    return json.dumps(model_to_dict(m))
