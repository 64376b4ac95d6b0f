"""CLI entry point for schubert-normality.

Subcommands:
  verdict    Verdict for one Schubert variety at a given level
  classify   Normal Schubert varieties of an almost simple group
  pi1        pi_1 order of a support Levi
  leq        Compare two classes in the dominance (or Besson-Hong) order
  levi       Support, Levi and pi_1 data of a class
  qm         Factorwise quasi-minuscule class
  hasse      Initial segments of the dominance order as DOT or JSON
  flag       Verdicts in the affine flag variety of a rank <= 3 group
  locmodel   Normality of a local model
  iwahori-A  Iwahori orbits in the affine Grassmannian of split type A
  validate   Validate a group spec

Exit codes: 0 on success, 2 on validation errors, 3 when a cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from schubert_normality import __version__

EXIT_VALIDATION = 2
EXIT_CAP = 3

logger = logging.getLogger("schubert_normality")


class SpecRejected(Exception):
    """A group spec failed semantic validation; issues were already printed."""


def _caps(args):
    from schubert_normality.config.schema import Caps

    return Caps.resolve(getattr(args, "cap", None))


def _load_group(args):
    """Load, validate and build the group named by --group."""
    from schubert_normality.cli.display import print_error, print_warning
    from schubert_normality.config.loader import load_group
    from schubert_normality.validation.spec_validator import errors_only, validate_group_spec

    spec = load_group(args.group, getattr(args, "char", None))
    issues = validate_group_spec(spec)
    for w in issues:
        if w.severity == "warning":
            print_warning(str(w))
    errors = errors_only(issues)
    if errors:
        for e in errors:
            print_error(str(e))
        raise SpecRejected(f"--group {args.group}: {len(errors)} error(s)")
    return spec.to_datum()


def _class(g, text: str, flag: str = "--mu"):
    from schubert_normality.coinvariants.lattice import coinvariants
    from schubert_normality.exceptions import InvalidCoweight
    from schubert_normality.rootdata.datum import parse_coweight

    try:
        return coinvariants(g).class_of(parse_coweight(g.datum, text))
    except InvalidCoweight as exc:
        raise InvalidCoweight(f"{flag}: {exc}") from exc


def _dominant(mu, flag: str = "--mu"):
    from schubert_normality.exceptions import NotDominant

    if not mu.is_dominant():
        raise NotDominant(f"{flag}: {mu.name} is not dominant")
    return mu


def _facet(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_verdict(args):
    """Verdict for Gr_{<= mu} (or the flag Schubert variety of t_mu) at a level."""
    from schubert_normality.cli.display import emit, print_verdict
    from schubert_normality.exceptions import UnsupportedLevel
    from schubert_normality.levels.flag import FlagStrategy
    from schubert_normality.levels.resolver import get_strategy

    if bool(args.mu) == bool(args.element):
        raise ValueError("pass exactly one of --mu and --element")
    g = _load_group(args)
    caps = _caps(args)
    strategy = get_strategy(args.level, g, caps, _facet(args.facet))
    if args.element:
        if not isinstance(strategy, FlagStrategy):
            raise UnsupportedLevel("--element needs --level iwahori or facet")
        verdict = strategy.element_verdict(strategy.weyl_group.parse(args.element))
        subject = {"element": args.element}
    else:
        mu = _dominant(_class(g, args.mu))
        verdict = strategy.verdict(mu)
        subject = {"mu": mu.to_dict()}
    if args.format == "table":
        print_verdict(f"{g.label()} at {strategy.describe()}", verdict)
        return
    emit(_dump({"group": g.label(), "level": strategy.describe(), **subject, **verdict.to_json()}))


def cmd_classify(args):
    """Classification table of an almost simple group."""
    from schubert_normality.cli.display import emit
    from schubert_normality.engine.renderer import emit_table
    from schubert_normality.normality.classify import classify

    g = _load_group(args)
    result = classify(g, all_components=args.all_components, raw=args.raw, max_nodes=_caps(args).nodes)
    emit(emit_table([result], args.format))


def cmd_pi1(args):
    """pi_1 order of the Levi of a support (full support by default)."""
    from schubert_normality.cli.display import emit
    from schubert_normality.coinvariants.lattice import coinvariants, pi1_coinvariants
    from schubert_normality.normality.criterion import LeviSupport, levi_connection_index, pi1_order

    g = _load_group(args)
    lat = coinvariants(g)
    if args.support:
        labels = _facet(args.support)
        if any(not 1 <= i <= lat.rank for i in labels):
            raise ValueError(f"--support: indices must lie in 1..{lat.rank}")
        s = LeviSupport.from_labels(labels)
    else:
        s = LeviSupport.of(range(lat.rank))
    order = pi1_order(lat, s)
    if args.format == "json":
        pi1 = pi1_coinvariants(g)
        emit(_dump({
            "group": g.label(),
            "support": s.labels(),
            "pi1_order": order,
            "levi_connection_index": levi_connection_index(lat, s),
            "components": {"torsion": list(pi1.torsion_invariants), "free_rank": pi1.free_rank},
        }))
        return
    emit(str(order))


def cmd_leq(args):
    """Dominance comparison la <= mu."""
    from schubert_normality.cli.display import emit
    from schubert_normality.dominance.besson_hong import besson_hong_leq
    from schubert_normality.dominance.order import leq

    g = _load_group(args)
    la = _class(g, args.la, "--la")
    mu = _class(g, args.mu)
    if args.order == "besson-hong":
        result = besson_hong_leq(la, mu, _caps(args).nodes)
    else:
        result = leq(_dominant(la, "--la"), _dominant(mu))
    emit("true" if result else "false")


def cmd_levi(args):
    """Support Levi and criterion data of a dominant class."""
    from schubert_normality.cli.display import emit
    from schubert_normality.dominance.order import minuscule_below
    from schubert_normality.normality.criterion import levi_connection_index, levi_of, levi_qm, pi1_order

    g = _load_group(args)
    mu = _dominant(_class(g, args.mu))
    s = levi_of(mu)
    lat = mu.lattice
    emit(_dump({
        "group": g.label(),
        "mu": mu.to_dict(),
        "minuscule": minuscule_below(mu).name,
        "support": s.labels(),
        "absolute_support": [i + 1 for i in s.absolute(lat)],
        "pi1_order": pi1_order(lat, s),
        "levi_connection_index": levi_connection_index(lat, s),
        "levi_qm": levi_qm(lat, s).name,
    }))


def cmd_qm(args):
    """Factorwise quasi-minuscule class."""
    from schubert_normality.cli.display import emit
    from schubert_normality.coinvariants.lattice import coinvariants
    from schubert_normality.dominance.order import factorwise_qm, quasi_minuscule

    g = _load_group(args)
    lat = coinvariants(g)
    if args.format == "json":
        emit(_dump({
            "group": g.label(),
            "qm": factorwise_qm(lat).to_dict(),
            "factors": [quasi_minuscule(lat, j).name for j in range(len(g.factors))],
        }))
        return
    emit(factorwise_qm(lat).name)


def cmd_hasse(args):
    """Hasse diagram segments of the dominance order."""
    from schubert_normality.cli.display import emit
    from schubert_normality.coinvariants.lattice import coinvariants
    from schubert_normality.dominance.hasse import hasse_segment
    from schubert_normality.engine.renderer import render_hasse_dot
    from schubert_normality.exceptions import WrongType

    g = _load_group(args)
    lat = coinvariants(g)
    caps = _caps(args)
    comps = lat.components
    if comps is None:
        raise WrongType("pi_1(G)_I is infinite; pass a semisimple group")
    if args.component is not None:
        comps = (lat.component_from_index(args.component),)
    segments = [hasse_segment(lat, c, caps.height, caps.nodes) for c in comps]
    if args.format == "json":
        emit(_dump([s.to_dict() for s in segments]))
        return
    emit(render_hasse_dot(segments))


def cmd_flag(args):
    """Verdicts for Schubert varieties in an affine flag variety."""
    from schubert_normality.affineweyl.flags import flag_rows, flag_summary, flag_verdict
    from schubert_normality.affineweyl.group import IwahoriWeylGroup
    from schubert_normality.cli.display import emit, print_flag_summary
    from schubert_normality.coinvariants.lattice import coinvariants
    from schubert_normality.engine.renderer import emit_flag_csv

    g = _load_group(args)
    caps = _caps(args)
    group = IwahoriWeylGroup(coinvariants(g), caps.rank)
    facet = _facet(args.facet)
    if args.element:
        v = group.parse(args.element)
        verdict = flag_verdict(group, v, facet, length_cap=caps.length)
        emit(_dump({"group": g.label(), "element": group.to_dict(v), **verdict.to_json()}))
        return
    rows = flag_rows(group, args.max_length, facet)
    if args.component is not None:
        rows = [r for r in rows if r["component"] == args.component]
    if args.format == "csv":
        emit(emit_flag_csv(rows))
    elif args.format == "json":
        emit(_dump(rows))
    else:
        print_flag_summary(g.label(), flag_summary(group, args.max_length, facet))


def cmd_locmodel(args):
    """Normality of a local model and its generic fiber."""
    from schubert_normality.cli.display import emit
    from schubert_normality.config.loader import load_triple
    from schubert_normality.locmodel.triple import LMTriple
    from schubert_normality.locmodel.verdict import admissible_max, generic_fiber_verdict, locmodel_verdict

    caps = _caps(args)
    if args.triple:
        t = LMTriple.from_spec(load_triple(args.triple))
    else:
        if not args.group or not args.mu:
            raise ValueError("--group and --mu are required without --triple")
        g = _load_group(args)
        t = LMTriple.build(g, args.mu, args.level, args.char_F, _facet(args.facet))
    verdict = locmodel_verdict(t, caps)
    emit(_dump({
        "group": t.group.label(),
        "mu_bar": t.mu_bar.to_dict(),
        "level": t.level.value,
        "char_F": t.char_F,
        "residue_char": t.residue_char,
        "generic_fiber": generic_fiber_verdict(t).status.value,
        "admissible_max": admissible_max(t, caps),
        **verdict.to_json(),
    }))


def cmd_iwahori_a(args):
    """Iwahori orbit closures in the affine Grassmannian of split type A."""
    from schubert_normality.cli.display import emit
    from schubert_normality.normality.typea import typeA_iwahori_grassmannian

    g = _load_group(args)
    mu = [int(x) for x in args.mu.split(",")]
    verdict = typeA_iwahori_grassmannian(g, mu)
    emit(_dump({"group": g.label(), **verdict.to_json()}))


def cmd_validate(args):
    """Validate a group spec without computing."""
    from schubert_normality.cli.display import print_success

    g = _load_group(args)
    print_success(f"Group spec is valid: {g.label()}")


def _add_group_args(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--group", "-g", required=required, help="Group spec file (JSON/YAML) or preset, e.g. pgl(3)@3")
    p.add_argument("--char", type=int, default=None, help="Override the characteristic")
    p.add_argument("--cap", type=int, default=None, help="Height and length cap (overrides SCHUBERT_CAP)")


def _configure_logging(verbose: bool):
    if not verbose:
        logger.setLevel(logging.WARNING)
        return
    from rich.logging import RichHandler

    from schubert_normality.cli.display import err_console

    handler = RichHandler(console=err_console, show_time=False, show_path=False)
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-normality",
        description="Decide normality of Schubert varieties in twisted affine Grassmannians and of local models",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", "-v", action="store_true", help="Log computation details to stderr")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    levels = ["abs-special", "special", "iwahori", "facet"]

    p = subparsers.add_parser("verdict", help="Verdict for one Schubert variety")
    _add_group_args(p)
    p.add_argument("--mu", help="Dominant coweight: integers or w1+2*w3")
    p.add_argument("--element", help="Affine Weyl group element such as s0s1s0 (iwahori/facet levels)")
    p.add_argument("--level", choices=levels, default="abs-special")
    p.add_argument("--facet", help="Affine Dynkin nodes fixing the facet, e.g. 0,1")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=cmd_verdict)

    p = subparsers.add_parser("classify", help="Classify normal Schubert varieties")
    _add_group_args(p)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.add_argument("--all-components", action="store_true", help="Include components the lattice does not realize")
    p.add_argument("--raw", action="store_true", help="One row per normal class instead of families")
    p.set_defaults(func=cmd_classify)

    p = subparsers.add_parser("pi1", help="pi_1 order of a support Levi")
    _add_group_args(p)
    p.add_argument("--support", help="1-based échelonnage indices, e.g. 2,3,4")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_pi1)

    p = subparsers.add_parser("leq", help="Compare two classes")
    _add_group_args(p)
    p.add_argument("--la", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--order", choices=["dominance", "besson-hong"], default="dominance")
    p.set_defaults(func=cmd_leq)

    p = subparsers.add_parser("levi", help="Support Levi of a class")
    _add_group_args(p)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_levi)

    p = subparsers.add_parser("qm", help="Factorwise quasi-minuscule class")
    _add_group_args(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_qm)

    p = subparsers.add_parser("hasse", help="Hasse diagram of the dominance order")
    _add_group_args(p)
    p.add_argument("--component", type=int, default=None)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_hasse)

    p = subparsers.add_parser("flag", help="Verdicts in an affine flag variety")
    _add_group_args(p)
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--component", type=int, default=None)
    p.add_argument("--facet", help="Affine Dynkin nodes fixing the facet; empty for Iwahori")
    p.add_argument("--element", help="Decide a single element, e.g. s0s1s0")
    p.add_argument("--format", choices=["csv", "json", "table"], default="table")
    p.set_defaults(func=cmd_flag)

    p = subparsers.add_parser("locmodel", help="Normality of a local model")
    _add_group_args(p, required=False)
    p.add_argument("--triple", help="LM-triple file (JSON/YAML)")
    p.add_argument("--mu", help="Dominant coweight; separate embeddings with ';'")
    p.add_argument("--level", choices=levels, default="abs-special")
    p.add_argument("--facet")
    p.add_argument("--char-F", dest="char_F", type=int, default=0, help="Characteristic of the generic fiber")
    p.set_defaults(func=cmd_locmodel)

    p = subparsers.add_parser("iwahori-A", help="Iwahori orbits in the affine Grassmannian of split type A")
    _add_group_args(p)
    p.add_argument("--mu", required=True, help="Epsilon coordinates summing to zero, e.g. -2,1,1")
    p.set_defaults(func=cmd_iwahori_a)

    p = subparsers.add_parser("validate", help="Validate a group spec")
    _add_group_args(p)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        sys.exit(1)

    _configure_logging(args.verbose)

    from pydantic import ValidationError

    from schubert_normality.cli.display import print_error
    from schubert_normality.exceptions import CapError, SchubertError

    try:
        args.func(args)
    except CapError as e:
        print_error(f"Cap exceeded: {e} (raise it with --cap or SCHUBERT_CAP)")
        sys.exit(EXIT_CAP)
    except SpecRejected as e:
        print_error(str(e))
        sys.exit(EXIT_VALIDATION)
    except (SchubertError, ValidationError, ValueError, OSError) as e:
        print_error(f"Error: {e}")
        sys.exit(EXIT_VALIDATION)


if __name__ == "__main__":
    main()
