"""Bounded backward proof search.

Search works on goals ``(ctx, goal)`` by iterative deepening over macro
steps, each of which emits ordinary checkable derivation nodes:

* an axiom instance whose context is included in ``ctx`` (plus ``Mon``);
* ``AndI`` on a conjunctive goal (two cuts against the axiom);
* the deduction step on ``psi -> chi``: prove ``chi`` from ``psi`` and the
  consequents of context formulas ``psi -> x``, lift with ``Imp1``, cut away
  ``psi -> psi`` with ``Imp0``;
* a cut on a lemma that an axiom gives directly from ``ctx``;
* ``Sym1`` splitting on a context formula;
* a general cut.

Witness formulas for cuts and ``Sym1`` come from the subformulas of the root
sequent and their single ``-> _|_`` wrappings.  Failing to find a proof
says nothing about derivability.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classes import MAX_ENUM_ATOMS
from .formula import BOT, TOP, And, Atom, Formula, Imp, neg, size, subformulas
from .kripke import extension
from .sequents import (
    Derivation,
    ProofSystem,
    Rule,
    Sequent,
    axiom,
    cut,
    get_system,
    imp1,
    mon,
    sym1,
)


@dataclass(frozen=True)
class SearchConfig:
    system: ProofSystem
    max_depth: int = 6
    formula_size_cap: int = 12
    prune_worlds: int = 2  # countermodel filter over class members this small; 0 disables

    def __post_init__(self):
        object.__setattr__(self, "system", get_system(self.system))
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if self.formula_size_cap < 1:
            raise ValueError("formula_size_cap must be >= 1")


def witness_candidates(s: Sequent, cap: int) -> list[Formula]:
    base = set()
    for f in itertools.chain(s.ctx, [s.goal]):
        base.update(subformulas(f))
    out = set(base)
    out.update(neg(f) for f in base)
    return sorted((f for f in out if size(f) <= cap), key=lambda f: (size(f), str(f)))


class _Pruner:
    """Refutes sequents on a fixed batch of small class members.

    Each formula gets a signature: the concatenation of its extensions in
    all batch models.  Sound: a refuted sequent is underivable.
    """

    def __init__(self, models):
        self.models = models
        self.caches = [dict() for _ in models]
        self.offsets = []
        full = off = 0
        for m in models:
            self.offsets.append(off)
            full |= m.frame.full << off
            off += m.frame.size
        self.full = full
        self.sigs: dict = {}

    def sig(self, f: Formula) -> int:
        s = self.sigs.get(f)
        if s is None:
            s = 0
            for m, cache, off in zip(self.models, self.caches, self.offsets):
                s |= extension(m, f, cache) << off
            self.sigs[f] = s
        return s

    def refutes(self, ctx: frozenset, goal: Formula) -> bool:
        mask = self.full
        for f in ctx:
            mask &= self.sig(f)
        return bool(mask & ~self.sig(goal))


def _pruner_for(s: Sequent, cfg: SearchConfig):
    if cfg.prune_worlds <= 0:
        return None
    # local imports: consequence depends on sequents only, not on search
    from .consequence import SYSTEM_CLASS, class_models, sequent_atoms

    names = sorted(sequent_atoms(s))
    if len(names) > MAX_ENUM_ATOMS:
        return None
    return _Pruner(list(class_models(SYSTEM_CLASS[cfg.system.tag], cfg.prune_worlds, names)))


class _Search:
    def __init__(self, root: Sequent, cfg: SearchConfig):
        self.cfg = cfg
        self.allowed = cfg.system.allowed
        self.cands = witness_candidates(root, cfg.formula_size_cap)
        self.pruner = _pruner_for(root, cfg)
        self.failed: dict = {}  # (ctx, goal) -> largest depth known to fail
        self.proved: dict = {}
        self.axiom_cache: dict = {}
        self.nodes = 0

    # ------------------------------------------------------------------ axioms
    def axiom_match(self, ctx: frozenset, goal: Formula) -> Derivation | None:
        key = (ctx, goal)
        if key in self.axiom_cache:
            return self.axiom_cache[key]
        d = self._axiom_match(ctx, goal)
        if d is not None:
            d = mon(d, ctx)
        self.axiom_cache[key] = d
        return d

    def _axiom_match(self, ctx: frozenset, goal: Formula) -> Derivation | None:
        ok = self.allowed
        if Rule.A in ok and goal in ctx:
            return axiom(Rule.A, phi=goal)
        if Rule.Bot in ok and BOT in ctx:
            return axiom(Rule.Bot, phi=goal)
        if Rule.Imp0 in ok and isinstance(goal, Imp) and goal.left == goal.right:
            return axiom(Rule.Imp0, phi=goal.left)
        if Rule.AndI in ok and isinstance(goal, And) and goal.left in ctx and goal.right in ctx:
            return axiom(Rule.AndI, phi=goal.left, psi=goal.right)
        for f in ctx:
            if isinstance(f, And):
                if Rule.AndE_L in ok and f.left == goal:
                    return axiom(Rule.AndE_L, phi=f.left, psi=f.right)
                if Rule.AndE_R in ok and f.right == goal:
                    return axiom(Rule.AndE_R, phi=f.left, psi=f.right)
            elif isinstance(f, Imp):
                if Rule.Refl in ok and f.right == goal and f.left in ctx:
                    return axiom(Rule.Refl, phi=f.left, psi=goal)
                if (
                    Rule.Imp2 in ok
                    and isinstance(goal, Imp)
                    and f.left == goal.left
                    and Imp(f.right, goal.right) in ctx
                ):
                    return axiom(Rule.Imp2, phi=goal.left, psi=f.right, chi=goal.right)
                if (
                    Rule.Sym2 in ok
                    and isinstance(goal, Imp)
                    and isinstance(goal.left, And)
                    and isinstance(f.left, And)
                    and f.right == goal.right
                    and f.left.left == goal.left.left
                ):
                    alpha, phi, psi, chi = goal.left.left, goal.left.right, f.left.right, goal.right
                    if Imp(And(alpha, neg(Imp(phi, psi))), chi) in ctx:
                        return axiom(Rule.Sym2, alpha=alpha, phi=phi, psi=psi, chi=chi)
        if isinstance(goal, Imp):
            if Rule.Tran in ok and goal.left == TOP and isinstance(goal.right, Imp) and goal.right in ctx:
                return axiom(Rule.Tran, phi=goal.right.left, psi=goal.right.right)
            p = goal.right
            if isinstance(p, Atom) and p in ctx:
                if Rule.PropTr in ok and goal.left == TOP:
                    return axiom(Rule.PropTr, p=p)
                if Rule.PropMinus in ok and goal.left == neg(TOP):
                    return axiom(Rule.PropMinus, p=p)
                if Rule.PropSy in ok and goal.left == neg(neg(p)):
                    return axiom(Rule.PropSy, p=p)
        return None

    # ------------------------------------------------------------------ search
    def solve(self, ctx: frozenset, goal: Formula, depth: int) -> Derivation | None:
        key = (ctx, goal)
        hit = self.proved.get(key)
        if hit is not None:
            return hit
        if self.failed.get(key, 0) >= depth:
            return None
        self.nodes += 1
        if self.pruner is not None and self.pruner.refutes(ctx, goal):
            self.failed[key] = 1 << 30
            return None
        d = self._solve(ctx, goal, depth)
        if d is None:
            self.failed[key] = depth
        else:
            self.proved[key] = d
        return d

    def _solve(self, ctx: frozenset, goal: Formula, depth: int) -> Derivation | None:
        d = self.axiom_match(ctx, goal)
        if d is not None or depth <= 1:
            return d
        sub = depth - 1
        ok = self.allowed

        if isinstance(goal, And) and Rule.AndI in ok and Rule.Cut in ok:
            left = self.solve(ctx, goal.left, sub)
            if left is not None:
                right = self.solve(ctx, goal.right, sub)
                if right is not None:
                    intro = axiom(Rule.AndI, phi=goal.left, psi=goal.right)
                    step = cut(intro, left, gamma={goal.right})
                    return cut(step, right, gamma=ctx)

        if isinstance(goal, Imp) and Rule.Imp1 in ok:
            d = self._deduction(ctx, goal, sub)
            if d is not None:
                return d

        if Rule.Cut in ok:
            for psi in self._lemma_goals(ctx):
                lemma = self.axiom_match(ctx, psi)
                if lemma is None:
                    continue
                rest = self.solve(ctx | {psi}, goal, sub)
                if rest is not None:
                    return cut(rest, lemma, gamma=ctx)

        if Rule.Sym1 in ok:
            for phi in sorted(ctx, key=str):
                for psi in self.cands:
                    alt = neg(Imp(phi, psi))
                    if psi in ctx or alt in ctx:
                        continue
                    left = self.solve(ctx | {psi}, goal, sub)
                    if left is None:
                        continue
                    right = self.solve(ctx | {alt}, goal, sub)
                    if right is not None:
                        return sym1(left, right, ctx, phi, psi)

        if Rule.Cut in ok:
            for psi in self.cands:
                if psi in ctx or psi == goal:
                    continue
                lemma = self.solve(ctx, psi, sub)
                if lemma is None:
                    continue
                rest = self.solve(ctx | {psi}, goal, sub)
                if rest is not None:
                    return cut(rest, lemma, gamma=ctx)
        return None

    def _lemma_goals(self, ctx: frozenset):
        """Witness candidates, then what persistence axioms give from ``ctx``."""
        seen = set(ctx)
        extra = []
        for f in ctx:
            if isinstance(f, Atom):
                extra += [Imp(TOP, f), Imp(neg(TOP), f), Imp(neg(neg(f)), f)]
            elif isinstance(f, Imp):
                extra.append(Imp(TOP, f))
        for psi in itertools.chain(self.cands, sorted(extra, key=str)):
            if psi not in seen and size(psi) <= self.cfg.formula_size_cap:
                seen.add(psi)
                yield psi

    def _deduction(self, ctx: frozenset, goal: Imp, sub: int) -> Derivation | None:
        psi = goal.left
        ok = self.allowed
        # T -> x in ctx yields psi -> x (Imp2 against psi -> T)
        lifts = []
        if {Rule.Imp0, Rule.Imp1, Rule.Imp2, Rule.Cut} <= ok and psi != TOP:
            for f in sorted(ctx, key=str):
                if isinstance(f, Imp) and f.left == TOP and Imp(psi, f.right) not in ctx:
                    psi_top = imp1(axiom(Rule.Imp0, phi=BOT), psi)
                    chain = axiom(Rule.Imp2, phi=psi, psi=TOP, chi=f.right)
                    lifts.append(mon(cut(chain, psi_top, gamma={f}), ctx))
        aug = ctx | {d.conclusion.goal for d in lifts}

        hyps = frozenset(f.right for f in aug if isinstance(f, Imp) and f.left == psi) | {psi}
        inner = self.solve(hyps, goal.right, sub)
        if inner is None:
            return None
        lifted = imp1(inner, psi)  # psi -> [hyps] |- goal
        refl = Imp(psi, psi)
        if refl not in aug:
            if Rule.Imp0 not in ok or Rule.Cut not in ok:
                return None
            lifted = cut(lifted, axiom(Rule.Imp0, phi=psi))
        d = mon(lifted, aug)
        for lemma in lifts:
            d = cut(d, lemma, gamma=d.conclusion.ctx - {lemma.conclusion.goal})
        return d


def prove(s: Sequent, cfg: SearchConfig) -> Derivation | None:
    """A derivation of exactly ``s`` in ``cfg.system``, or ``None``."""
    search = _Search(s, cfg)
    for depth in range(1, cfg.max_depth + 1):
        d = search.solve(s.ctx, s.goal, depth)
        if d is not None:
            return d
    return None

