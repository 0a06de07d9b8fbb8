"""Command-line front end.

Exit status: 0 for an affirmative answer, 1 for a negative one (false,
countermodel, not found, failed check), 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classes import ModelClass, class_member
from .consequence import Countermodel, refuting_worlds, semantic_consequence, sequent_valid_in_model
from .formula import FormulaSyntaxError, parse, to_text, translate_modal
from .kripke import (
    BoundError,
    CapExceeded,
    ModelFormatError,
    PointedModel,
    load_model,
    members,
    model_to_dict,
    propositions,
    satisfies,
)
from .search import SearchConfig, prove
from .sequents import DerivationError, check_derivation, derivation_to_dict, get_system, load_derivation, parse_sequent
from .unravel import UnravelError, unravel

CLASS_TAGS = [c.value for c in ModelClass]
SYSTEM_TAGS = ["kp", "tp", "bp", "v", "kb4p", "i", "o", "c"]


class InputError(Exception):
    pass


def _set_text(x: int) -> str:
    return "{" + ", ".join(map(str, members(x))) + "}"


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text)


def cmd_check(args) -> int:
    m = load_model(args.model)
    f = parse(args.formula)
    result = satisfies(m, args.world, f)
    _emit(args, {"result": result}, str(result).lower())
    return 0 if result else 1


def cmd_valid(args) -> int:
    m = load_model(args.model)
    s = parse_sequent(args.sequent)
    result = sequent_valid_in_model(m, s)
    bad = members(refuting_worlds(m, s))
    text = "true" if result else f"false\nrefuted at worlds {bad}"
    _emit(args, {"result": result, "refuting_worlds": bad}, text)
    return 0 if result else 1


def cmd_consequence(args) -> int:
    s = parse_sequent(args.sequent)
    atoms = [a.strip() for a in args.atoms.split(",") if a.strip()] if args.atoms else None
    verdict = semantic_consequence(s, ModelClass.from_tag(args.cls), args.max_worlds, atoms)
    if isinstance(verdict, Countermodel):
        payload = {"result": "countermodel", "model": model_to_dict(verdict.model), "world": verdict.point}
        _emit(args, payload, f"{json.dumps(payload['model'])}\nworld {verdict.point}")
        return 1
    _emit(args, {"result": "valid-up-to", "max_worlds": verdict.max_worlds}, f"valid-up-to {verdict.max_worlds}")
    return 0


def cmd_props(args) -> int:
    m = load_model(args.model)
    props = propositions(m.frame)
    _emit(args, {"propositions": [members(x) for x in props]}, "\n".join(_set_text(x) for x in props))
    return 0


def cmd_derive_check(args) -> int:
    try:
        d = load_derivation(args.proof)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read derivation: {exc}") from exc
    try:
        check_derivation(d, get_system(args.system))
    except DerivationError as exc:
        _emit(args, {"result": "error", "kind": exc.kind, "path": list(exc.path), "reason": exc.reason}, str(exc))
        return 1
    _emit(args, {"result": "ok"}, "ok")
    return 0


def cmd_prove(args) -> int:
    s = parse_sequent(args.sequent)
    cfg = SearchConfig(get_system(args.system), args.depth, args.size_cap)
    d = prove(s, cfg)
    if d is None:
        _emit(args, {"result": "not-found"}, "not-found")
        return 1
    tree = derivation_to_dict(d)
    if args.emit:
        with open(args.emit, "w") as fh:
            json.dump(tree, fh, indent=2)
    _emit(args, {"result": "found", "derivation": tree}, json.dumps(tree, indent=2))
    return 0


def cmd_unravel(args) -> int:
    m = load_model(args.model)
    u = unravel(PointedModel(m, args.world), args.depth, args.reflexive)
    payload = model_to_dict(u.model)
    payload["depth_map"] = list(u.depth_map)
    print(json.dumps(payload))
    return 0


def cmd_translate(args) -> int:
    out = to_text(translate_modal(parse(args.formula)))
    _emit(args, {"result": out}, out)
    return 0


def cmd_class_check(args) -> int:
    m = load_model(args.model)
    result = class_member(m, ModelClass.from_tag(args.cls))
    _emit(args, {"result": result}, str(result).lower())
    return 0 if result else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="relsem", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="truth of a formula at a world")
    p.add_argument("--model", required=True)
    p.add_argument("--world", type=int, required=True)
    p.add_argument("--formula", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("valid", parents=[common], help="validity of a sequent in a model")
    p.add_argument("--model", required=True)
    p.add_argument("--sequent", required=True)
    p.set_defaults(func=cmd_valid)

    p = sub.add_parser("consequence", parents=[common], help="bounded countermodel search over a class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--max-worlds", type=int, default=3)
    p.add_argument("--sequent", required=True)
    p.add_argument("--atoms", help="comma-separated atoms to enumerate (default: those of the sequent)")
    p.set_defaults(func=cmd_consequence)

    p = sub.add_parser("props", parents=[common], help="list the propositions of a model's frame")
    p.add_argument("--model", required=True)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("derive-check", parents=[common], help="check a derivation file")
    p.add_argument("--system", required=True, type=str.lower, choices=SYSTEM_TAGS)
    p.add_argument("--proof", required=True)
    p.set_defaults(func=cmd_derive_check)

    p = sub.add_parser("prove", parents=[common], help="bounded proof search")
    p.add_argument("--system", required=True, type=str.lower, choices=SYSTEM_TAGS)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--size-cap", type=int, default=12)
    p.add_argument("--sequent", required=True)
    p.add_argument("--emit", help="write the derivation JSON here")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("unravel", parents=[common], help="unravel a pointed model")
    p.add_argument("--model", required=True)
    p.add_argument("--world", type=int, default=0)
    p.add_argument("--depth", type=int, help="path-length bound (omit for the full unravelling)")
    p.add_argument("--reflexive", action="store_true")
    p.set_defaults(func=cmd_unravel)

    p = sub.add_parser("translate", parents=[common], help="modal translation of a formula")
    p.add_argument("--formula", required=True)
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("class-check", parents=[common], help="class membership of a model")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_TAGS)
    p.add_argument("--model", required=True)
    p.set_defaults(func=cmd_class_check)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.json = getattr(args, "json", False)
    try:
        return args.func(args)
    except (InputError, FormulaSyntaxError, ModelFormatError, BoundError, CapExceeded, UnravelError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
