"""Sequents, the rule catalogue, derivation checking and derived-rule macros.

Every derivation node records the witnesses that instantiate its rule
schema (``params``), so a node can be checked locally without guessing how a
context splits.  Parameter names per rule::

    A{phi}  Mon{}  Cut{gamma, psi}  Bot{phi}  AndI{phi, psi}
    AndE_L{phi, psi}  AndE_R{phi, psi}  Imp0{phi}  Imp1{psi}
    Imp2{phi, psi, chi}  Refl{phi, psi}  Tran{phi, psi}
    Sym1{gamma, phi, psi}  Sym2{alpha, phi, psi, chi}
    PropMinus{p}  PropTr{p}  PropSy{p}

``gamma`` is a set of formulas; ``p`` must be an atom; everything else is a
formula.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .formula import BOT, TOP, And, Atom, Formula, FormulaSyntaxError, Imp, conj, neg, parse, to_text


class Rule(str, enum.Enum):
    A = "A"
    Mon = "Mon"
    Cut = "Cut"
    Bot = "Bot"
    AndI = "AndI"
    AndE_L = "AndE_L"
    AndE_R = "AndE_R"
    Imp0 = "Imp0"
    Imp1 = "Imp1"
    Imp2 = "Imp2"
    Refl = "Refl"
    Tran = "Tran"
    Sym1 = "Sym1"
    Sym2 = "Sym2"
    PropMinus = "PropMinus"
    PropTr = "PropTr"
    PropSy = "PropSy"


ARITY = {r: 0 for r in Rule}
ARITY.update({Rule.Mon: 1, Rule.Imp1: 1, Rule.Cut: 2, Rule.Sym1: 2})

PARAMS = {
    Rule.A: ("phi",),
    Rule.Mon: (),
    Rule.Cut: ("gamma", "psi"),
    Rule.Bot: ("phi",),
    Rule.AndI: ("phi", "psi"),
    Rule.AndE_L: ("phi", "psi"),
    Rule.AndE_R: ("phi", "psi"),
    Rule.Imp0: ("phi",),
    Rule.Imp1: ("psi",),
    Rule.Imp2: ("phi", "psi", "chi"),
    Rule.Refl: ("phi", "psi"),
    Rule.Tran: ("phi", "psi"),
    Rule.Sym1: ("gamma", "phi", "psi"),
    Rule.Sym2: ("alpha", "phi", "psi", "chi"),
    Rule.PropMinus: ("p",),
    Rule.PropTr: ("p",),
    Rule.PropSy: ("p",),
}

AXIOMS = frozenset(r for r in Rule if ARITY[r] == 0)


@dataclass(frozen=True)
class Sequent:
    ctx: frozenset
    goal: Formula

    def __post_init__(self):
        object.__setattr__(self, "ctx", frozenset(self.ctx))

    @classmethod
    def of(cls, ctx: Iterable[Formula | str], goal: Formula | str) -> "Sequent":
        def f(x):
            return parse(x) if isinstance(x, str) else x
        return cls(frozenset(f(x) for x in ctx), f(goal))

    def __str__(self) -> str:
        return sequent_to_text(self)


def sequent_to_text(s: Sequent) -> str:
    ctx = ", ".join(sorted(to_text(f) for f in s.ctx))
    return f"{ctx} ; {to_text(s.goal)}" if ctx else f"; {to_text(s.goal)}"


def parse_sequent(text: str) -> Sequent:
    """``"p, p -> q ; q"``: comma-separated context, ``;``, goal."""
    if text.count(";") != 1:
        raise FormulaSyntaxError("sequent needs exactly one ';'", text.find(";") if ";" in text else len(text), text)
    left, right = text.split(";")
    ctx = [parse(part) for part in left.split(",") if part.strip()]
    return Sequent(frozenset(ctx), parse(right))


@dataclass(frozen=True)
class Derivation:
    conclusion: Sequent
    rule: Rule
    params: Mapping = field(default_factory=dict)
    premises: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "rule", Rule(self.rule))
        object.__setattr__(self, "premises", tuple(self.premises))
        params = dict(self.params)
        if "gamma" in params:
            params["gamma"] = frozenset(params["gamma"])
        object.__setattr__(self, "params", params)

    def __hash__(self):
        return hash((self.conclusion, self.rule, self.premises))

    def nodes(self):
        """Pre-order walk yielding ``(path, node)``."""
        stack = [((), self)]
        while stack:
            path, d = stack.pop()
            yield path, d
            for i in reversed(range(len(d.premises))):
                stack.append((path + (i,), d.premises[i]))

    def rules_used(self) -> set[Rule]:
        return {d.rule for _, d in self.nodes()}

    def height(self) -> int:
        return 1 + max((p.height() for p in self.premises), default=0)


@dataclass(frozen=True)
class ProofSystem:
    tag: str
    allowed: frozenset

    def __str__(self) -> str:
        return self.tag


BASE_RULES = frozenset({
    Rule.A, Rule.Mon, Rule.Cut, Rule.Bot, Rule.AndI, Rule.AndE_L, Rule.AndE_R,
    Rule.Imp0, Rule.Imp1, Rule.Imp2,
})

SYSTEMS = {
    tag: ProofSystem(tag, BASE_RULES | frozenset(extra))
    for tag, extra in {
        "Kp": {Rule.PropMinus},
        "Tp": {Rule.Refl, Rule.PropMinus},
        "Bp": {Rule.Sym1, Rule.Sym2, Rule.PropSy},
        "V": {Rule.Tran, Rule.PropTr},
        "KB4p": {Rule.Tran, Rule.Sym1, Rule.Sym2, Rule.PropTr},
        "I": {Rule.Refl, Rule.Tran, Rule.PropTr},
        "O": {Rule.Refl, Rule.Sym1, Rule.Sym2, Rule.PropSy},
        "C": {Rule.Refl, Rule.Tran, Rule.Sym1, Rule.Sym2, Rule.PropTr},
    }.items()
}


def get_system(tag: str | ProofSystem) -> ProofSystem:
    if isinstance(tag, ProofSystem):
        return tag
    for key, sys in SYSTEMS.items():
        if key.lower() == tag.lower():
            return sys
    raise ValueError(f"unknown proof system {tag!r}")


# --------------------------------------------------------------------------
# single steps

class DerivationError(ValueError):
    """A derivation failed to check.

    ``kind`` is ``"rule-not-in-system"``, ``"arity"`` or ``"step-invalid"``;
    ``path`` is the tuple of premise indices from the root to the bad node.
    """

    def __init__(self, kind: str, path: tuple, reason: str):
        where = "root" if not path else "premises" + "".join(f"[{i}]" for i in path)
        super().__init__(f"{kind} at {where}: {reason}")
        self.kind = kind
        self.path = path
        self.reason = reason


def _axiom_instance(rule: Rule, p: Mapping) -> Sequent:
    """The unique sequent an axiom schema yields for the given witnesses."""
    phi, psi, chi = p.get("phi"), p.get("psi"), p.get("chi")
    if rule is Rule.Bot:
        return Sequent({BOT}, phi)
    if rule is Rule.AndI:
        return Sequent({phi, psi}, And(phi, psi))
    if rule is Rule.AndE_L:
        return Sequent({And(phi, psi)}, phi)
    if rule is Rule.AndE_R:
        return Sequent({And(phi, psi)}, psi)
    if rule is Rule.Imp0:
        return Sequent(set(), Imp(phi, phi))
    if rule is Rule.Imp2:
        return Sequent({Imp(phi, psi), Imp(psi, chi)}, Imp(phi, chi))
    if rule is Rule.Refl:
        return Sequent({phi, Imp(phi, psi)}, psi)
    if rule is Rule.Tran:
        return Sequent({Imp(phi, psi)}, Imp(TOP, Imp(phi, psi)))
    if rule is Rule.Sym2:
        alpha = p["alpha"]
        return Sequent(
            {Imp(And(alpha, psi), chi), Imp(And(alpha, neg(Imp(phi, psi))), chi)},
            Imp(And(alpha, phi), chi),
        )
    atom = p["p"]
    if rule is Rule.PropMinus:
        return Sequent({atom}, Imp(neg(TOP), atom))
    if rule is Rule.PropTr:
        return Sequent({atom}, Imp(TOP, atom))
    if rule is Rule.PropSy:
        return Sequent({atom}, Imp(neg(neg(atom)), atom))
    raise ValueError(f"{rule.value} is not an instance-determined axiom")


def explain_step(conclusion: Sequent, rule: Rule | str, params: Mapping, premises: Sequence[Sequent]) -> str | None:
    """``None`` if the step is a correct instance of ``rule``, else the failed
    side condition."""
    rule = Rule(rule)
    if len(premises) != ARITY[rule]:
        return f"{rule.value} takes {ARITY[rule]} premise(s), got {len(premises)}"
    missing = [k for k in PARAMS[rule] if params.get(k) is None]
    if missing:
        return f"{rule.value} missing witness(es) {', '.join(missing)}"
    ctx, goal = conclusion.ctx, conclusion.goal

    if rule is Rule.A:
        phi = params["phi"]
        if goal != phi:
            return "goal is not phi"
        if phi not in ctx:
            return "phi not in context"
        return None
    if rule is Rule.Mon:
        (prem,) = premises
        if prem.goal != goal:
            return "premise goal differs from conclusion goal"
        if not prem.ctx <= ctx:
            return "premise context not included in conclusion context"
        return None
    if rule is Rule.Cut:
        gamma, psi = params["gamma"], params["psi"]
        major, minor = premises
        if major.ctx != gamma | {psi}:
            return "first premise context is not gamma + {psi}"
        if major.goal != goal:
            return "first premise goal differs from conclusion goal"
        if minor.goal != psi:
            return "second premise goal is not psi"
        if ctx != gamma | minor.ctx:
            return "conclusion context is not gamma + second premise context"
        return None
    if rule is Rule.Imp1:
        psi = params["psi"]
        (prem,) = premises
        if goal != Imp(psi, prem.goal):
            return "goal is not psi -> (premise goal)"
        if ctx != frozenset(Imp(psi, chi) for chi in prem.ctx):
            return "context is not psi -> [premise context]"
        return None
    if rule is Rule.Sym1:
        gamma, phi, psi = params["gamma"], params["phi"], params["psi"]
        left, right = premises
        if left.ctx != gamma | {psi}:
            return "first premise context is not gamma + {psi}"
        if right.ctx != gamma | {neg(Imp(phi, psi))}:
            return "second premise context is not gamma + {(phi -> psi) -> _|_}"
        if left.goal != goal or right.goal != goal:
            return "premise goals differ from conclusion goal"
        if ctx != gamma | {phi}:
            return "conclusion context is not gamma + {phi}"
        return None
    if rule in (Rule.PropMinus, Rule.PropTr, Rule.PropSy) and not isinstance(params["p"], Atom):
        return f"{rule.value} applies to atoms only"
    expected = _axiom_instance(rule, params)
    if rule is Rule.Bot:
        ok = ctx == expected.ctx and goal == expected.goal
    else:
        ok = conclusion == expected
    if not ok:
        return f"conclusion is not the {rule.value} instance {sequent_to_text(expected)}"
    return None


def check_step(conclusion: Sequent, rule: Rule | str, params: Mapping, premises: Sequence[Sequent]) -> bool:
    return explain_step(conclusion, rule, params, premises) is None


def check_derivation(d: Derivation, system: ProofSystem | str) -> None:
    """Raise :class:`DerivationError` at the first bad node in pre-order."""
    system = get_system(system)
    for path, node in d.nodes():
        if node.rule not in system.allowed:
            raise DerivationError("rule-not-in-system", path, f"{node.rule.value} is not a rule of {system.tag}")
        if len(node.premises) != ARITY[node.rule]:
            raise DerivationError(
                "arity", path, f"{node.rule.value} takes {ARITY[node.rule]} premise(s), got {len(node.premises)}"
            )
        reason = explain_step(node.conclusion, node.rule, node.params, [p.conclusion for p in node.premises])
        if reason is not None:
            raise DerivationError("step-invalid", path, reason)


def is_derivation(d: Derivation, system: ProofSystem | str) -> bool:
    try:
        check_derivation(d, system)
    except DerivationError:
        return False
    return True


# --------------------------------------------------------------------------
# node constructors

def axiom(rule: Rule | str, **params) -> Derivation:
    """Build an axiom node; its conclusion is computed from the witnesses."""
    rule = Rule(rule)
    if rule is Rule.A:
        phi = params["phi"]
        ctx = frozenset(params.get("ctx", ())) | {phi}
        return Derivation(Sequent(ctx, phi), rule, {"phi": phi})
    return Derivation(_axiom_instance(rule, params), rule, {k: params[k] for k in PARAMS[rule]})


def mon(d: Derivation, ctx: Iterable[Formula]) -> Derivation:
    ctx = frozenset(ctx)
    if ctx == d.conclusion.ctx:
        return d
    return Derivation(Sequent(ctx, d.conclusion.goal), Rule.Mon, {}, (d,))


def cut(major: Derivation, minor: Derivation, gamma: Iterable[Formula] | None = None) -> Derivation:
    """Cut ``minor``'s goal out of ``major``'s context.

    ``gamma`` defaults to ``major``'s context minus the cut formula.
    """
    psi = minor.conclusion.goal
    gamma = major.conclusion.ctx - {psi} if gamma is None else frozenset(gamma)
    concl = Sequent(gamma | minor.conclusion.ctx, major.conclusion.goal)
    return Derivation(concl, Rule.Cut, {"gamma": gamma, "psi": psi}, (major, minor))


def imp1(d: Derivation, psi: Formula) -> Derivation:
    s = d.conclusion
    concl = Sequent(frozenset(Imp(psi, chi) for chi in s.ctx), Imp(psi, s.goal))
    return Derivation(concl, Rule.Imp1, {"psi": psi}, (d,))


def sym1(left: Derivation, right: Derivation, gamma: Iterable[Formula], phi: Formula, psi: Formula) -> Derivation:
    gamma = frozenset(gamma)
    concl = Sequent(gamma | {phi}, left.conclusion.goal)
    return Derivation(concl, Rule.Sym1, {"gamma": gamma, "phi": phi, "psi": psi}, (left, right))


# --------------------------------------------------------------------------
# derived rules

def dt0(sub: Derivation) -> Derivation:
    """From a derivation of ``phi |- psi`` build one of ``|- phi -> psi``."""
    s = sub.conclusion
    if len(s.ctx) != 1:
        raise ValueError("DT0 needs a premise with exactly one context formula")
    (phi,) = s.ctx
    lifted = imp1(sub, phi)  # {phi -> phi} |- phi -> psi
    return cut(lifted, axiom(Rule.Imp0, phi=phi), gamma=())


def fin_and_intro(fs: Sequence[Formula]) -> Derivation:
    """``{f1, ..., fn} |- f1 & ... & fn`` for n >= 2."""
    fs = list(fs)
    if len(fs) < 2:
        raise ValueError("fin-and rules need n >= 2")
    d = axiom(Rule.AndI, phi=fs[0], psi=fs[1])
    for k in range(2, len(fs)):
        prev = d.conclusion.goal
        step = axiom(Rule.AndI, phi=prev, psi=fs[k])
        d = cut(step, d, gamma={fs[k]})
    return d


def fin_and_elim(fs: Sequence[Formula], i: int) -> Derivation:
    """``f1 & ... & fn |- fi`` for n >= 2 and 1 <= i <= n."""
    fs = list(fs)
    n = len(fs)
    if n < 2:
        raise ValueError("fin-and rules need n >= 2")
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside 1..{n}")
    whole = conj(*fs[: n - 1])
    if i == n:
        return axiom(Rule.AndE_R, phi=whole, psi=fs[-1])
    left = axiom(Rule.AndE_L, phi=whole, psi=fs[-1])
    if n == 2:
        return left
    return cut(fin_and_elim(fs[: n - 1], i), left, gamma=())


def imp_fin_and_intro(alpha: Formula, fs: Sequence[Formula]) -> Derivation:
    return imp1(fin_and_intro(fs), alpha)


def imp_fin_and_elim(alpha: Formula, fs: Sequence[Formula], i: int) -> Derivation:
    return imp1(fin_and_elim(fs, i), alpha)


def expand_derived(name: str, *args) -> Derivation:
    """Dispatch by macro name: ``DT0(sub)``, ``finAndI(fs)``, ``finAndE(fs, i)``,
    ``impFinAndI(alpha, fs)``, ``impFinAndE(alpha, fs, i)``."""
    table = {
        "DT0": dt0,
        "finAndI": fin_and_intro,
        "finAndE": fin_and_elim,
        "impFinAndI": imp_fin_and_intro,
        "impFinAndE": imp_fin_and_elim,
    }
    try:
        fn = table[name]
    except KeyError:
        raise ValueError(f"unknown derived rule {name!r}") from None
    return fn(*args)


# --------------------------------------------------------------------------
# JSON

def _fmt(x):
    if isinstance(x, (set, frozenset)):
        return sorted(to_text(f) for f in x)
    return to_text(x)


def derivation_to_dict(d: Derivation) -> dict:
    return {
        "rule": d.rule.value,
        "conclusion": {"ctx": sorted(to_text(f) for f in d.conclusion.ctx), "goal": to_text(d.conclusion.goal)},
        "params": {k: _fmt(v) for k, v in d.params.items()},
        "premises": [derivation_to_dict(p) for p in d.premises],
    }


def derivation_from_dict(data: Mapping) -> Derivation:
    try:
        rule = Rule(data["rule"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad or missing rule: {exc}") from exc
    concl = data.get("conclusion") or {}
    sequent = Sequent(frozenset(parse(t) for t in concl.get("ctx", [])), parse(concl["goal"]))
    params = {}
    for k, v in (data.get("params") or {}).items():
        if k == "gamma":
            params[k] = frozenset(parse(t) for t in v)
        else:
            params[k] = parse(v)
    premises = tuple(derivation_from_dict(p) for p in data.get("premises", []))
    return Derivation(sequent, rule, params, premises)


def dump_derivation(d: Derivation, indent: int | None = 2) -> str:
    return json.dumps(derivation_to_dict(d), indent=indent)


def load_derivation(path) -> Derivation:
    with open(path) as fh:
        return derivation_from_dict(json.load(fh))
