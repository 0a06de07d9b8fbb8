"""Tree unravelling of a pointed model, optionally reflexive, optionally cut
off at a path-length bound."""

from __future__ import annotations

from dataclasses import dataclass

from .kripke import Frame, Model, PointedModel, REFLEXIVE, frame_has, members, worldset


class UnravelError(ValueError):
    pass


@dataclass(frozen=True)
class UnravelledModel:
    model: Model
    paths: tuple[tuple[int, ...], ...]  # world i is the path paths[i]; world 0 is the root
    depth_map: tuple[int, ...]
    truncated_at: int | None  # None: every path is present

    def last(self, i: int) -> int:
        """The source world a path ends in."""
        return self.paths[i][-1]

    def interior(self, i: int) -> bool:
        """True when every R-extension of path ``i`` is present."""
        return self.truncated_at is None or self.depth_map[i] < self.truncated_at


def reachable_acyclic(fr: Frame, root: int) -> bool:
    """No cycle is reachable from ``root``."""
    state = {}  # 1: on stack, 2: done

    def visit(w: int) -> bool:
        state[w] = 1
        for t in members(fr.succ[w]):
            s = state.get(t)
            if s == 1 or (s is None and not visit(t)):
                return False
        state[w] = 2
        return True

    return visit(root)


def unravel(pm: PointedModel, depth: int | None = None, reflexive: bool = False) -> UnravelledModel:
    """Unravel ``pm`` along R-paths from its point.

    ``depth=None`` keeps every path and needs an acyclic reachable part.
    Worlds are numbered breadth-first, siblings by ascending last world.
    """
    m, root = pm.model, pm.point
    fr = m.frame
    if depth is not None and depth < 0:
        raise UnravelError("depth must be non-negative")
    if reflexive:
        if depth is None:
            raise UnravelError("the reflexive unravelling is infinite; give a depth")
        if not frame_has(fr, REFLEXIVE):
            raise UnravelError("reflexive unravelling needs a reflexive source frame")
    elif depth is None and not reachable_acyclic(fr, root):
        raise UnravelError("a cycle is reachable from the point; give a depth")

    paths = [(root,)]
    depth_map = [0]
    edges = []
    level_start, level = 0, 0
    while depth is None or level < depth:
        level_end = len(paths)
        if level_start == level_end:
            break
        for i in range(level_start, level_end):
            for t in members(fr.succ[paths[i][-1]]):
                edges.append((i, len(paths)))
                paths.append(paths[i] + (t,))
                depth_map.append(level + 1)
        level_start, level = level_end, level + 1

    n = len(paths)
    if reflexive:
        edges.extend((i, i) for i in range(n))
    frame = Frame.from_pairs(n, edges)
    valuation = tuple(
        (atom, worldset(i for i, p in enumerate(paths) if x >> p[-1] & 1)) for atom, x in m.valuation
    )
    return UnravelledModel(Model(frame, valuation), tuple(paths), tuple(depth_map), depth)


def bounded_morphism_violations(u: UnravelledModel, source: Model) -> list[str]:
    """Forth on every edge, back on interior worlds, atoms on every world,
    for the last-element map."""
    out = []
    fr, src = u.model.frame, source.frame
    for i in range(fr.size):
        for j in members(fr.succ[i]):
            if not src.related(u.last(i), u.last(j)):
                out.append(f"forth fails on edge {i}->{j}")
        if u.interior(i):
            images = {u.last(j) for j in members(fr.succ[i])}
            for t in members(src.succ[u.last(i)]):
                if t not in images:
                    out.append(f"back fails at {i} for source successor {t}")
        for atom, x in source.valuation:
            if bool(u.model.value(atom) >> i & 1) != bool(x >> u.last(i) & 1):
                out.append(f"atom {atom} differs at {i}")
    return out
