"""Command-line interface: ``gen``, ``check``, ``classify``, ``verify`` and ``census``.

Exit status is 0 when everything agrees, 1 when a prediction disagrees with
the oracle and 2 on bad input or configuration.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import families
from .census import WORKERS_ENV, ConfigError, SuiteConfig, run_census
from .classify import cross_validate, predict
from .connectivity import DEFAULT_ENUMERATION_CAP, connectivity_report
from .graph import GraphError
from .io import InputError, dumps_graph, group_from_json, read_graph
from .matching import (
    CapExceeded,
    is_bicritical,
    is_elementary_bipartite,
    is_factor_critical,
    is_k_extendable,
    tutte_witness,
)
from .symmetry import is_isomorphic, is_vertex_transitive

log = logging.getLogger("extlab")

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT = 0, 1, 2


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


# --- gen -----------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    kind = args.family
    if kind == "circulant":
        g = families.circulant(args.n, args.s)
    elif kind == "cayley":
        g = families.cayley(group_from_json(json.loads(Path(args.group).read_text())), args.s)
    elif kind == "gp":
        g = families.gp(args.n, args.k)
    elif kind == "tm":
        g = families.t_m(args.m, args.choice)
    elif kind == "dl":
        g = families.double_ladder(args.parity, args.k, args.matching)
    elif kind == "exceptional":
        g = families.exceptional_circulant(args.which, args.n)
    else:
        g = families.named(args.which)
    sys.stdout.write(dumps_graph(g) + "\n")
    return EXIT_OK


# --- check ---------------------------------------------------------------------


def _record(prop: str, value, witness=None) -> dict:
    return {"property": prop, "value": value, "witness": witness}


def cmd_check(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    records = []
    if args.extendable is not None:
        res = is_k_extendable(g, args.extendable)
        records.append(_record(f"{args.extendable}-extendable", res.value,
                               [list(e) for e in res.witness] if res.witness else None))
    if args.factor_critical:
        records.append(_record("factor-critical", is_factor_critical(g)))
    if args.bicritical:
        records.append(_record("bicritical", is_bicritical(g)))
    if args.elementary:
        records.append(_record("elementary-bipartite", is_elementary_bipartite(g)))
    if args.tutte:
        w = tutte_witness(g, args.cap_vertices)
        records.append(_record("perfect-matching", w is None,
                               None if w is None else {"u": sorted(w.u), "deficiency": w.deficiency}))
    if args.connectivity:
        vt = is_vertex_transitive(g)[0]
        records.append(_record("connectivity", connectivity_report(g, args.cap, transitive=vt).to_json()))
    if args.vertex_transitive:
        vt, orbits = is_vertex_transitive(g)
        records.append(_record("vertex-transitive", vt, [list(p) for p in orbits.parts]))
    if args.iso:
        w = is_isomorphic(g, read_graph(args.iso))
        records.append(_record("isomorphic", bool(w), list(w.mapping) if w else w.invariant))
    if not records:
        raise InputError("no-property", "choose at least one property flag")
    for rec in records:
        _emit(rec)
    return EXIT_OK


# --- classify / verify ---------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    if args.certificate:
        cert = cross_validate(g, cap=args.cap)
        _emit(cert.to_json())
        return EXIT_DISAGREE if cert.agreement is False else EXIT_OK
    _emit(predict(g).to_json())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    cert = cross_validate(read_graph(args.graph), cap=args.cap)
    _emit(cert.to_json())
    return EXIT_DISAGREE if cert.agreement is False else EXIT_OK


# --- census --------------------------------------------------------------------


def cmd_census(args: argparse.Namespace) -> int:
    data = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from None
    if args.seed is not None:
        data["seed"] = args.seed
    config = SuiteConfig.from_json(data)
    log.info("census with %d worker(s)", config.workers)
    report = run_census(config)
    payload = report.to_json()
    out = args.out or config.out
    if out:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
        if not args.no_figures:
            from .plotting import render_report
            for path in render_report(payload, args.figures or out.parent / (out.stem + "_figures")):
                log.info("wrote %s", path)
    else:
        _emit(payload)
    for rec in report.disagreements:
        log.error("disagreement: %s", rec["id"])
    sys.stderr.write(json.dumps(report.tallies, sort_keys=True) + "\n")
    return EXIT_DISAGREE if report.disagreements else EXIT_OK


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="extlab", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit Graph JSON for a family member")
    fam = gen.add_subparsers(dest="family", required=True)
    c = fam.add_parser("circulant")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--s", type=_ints, required=True)
    c = fam.add_parser("cayley")
    c.add_argument("--group", required=True, help="GroupTable JSON file")
    c.add_argument("--s", type=_ints, required=True)
    c = fam.add_parser("gp")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c = fam.add_parser("tm")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--choice", choices=("straight", "crossed"), default="straight")
    c = fam.add_parser("dl")
    c.add_argument("--parity", choices=("odd", "even"), required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--matching", required=True, help='e.g. "a1c3,b1b5,c1a2"')
    c = fam.add_parser("exceptional")
    c.add_argument("--which", choices=families.EXCEPTIONAL, required=True)
    c.add_argument("--n", type=int, required=True)
    c = fam.add_parser("named")
    c.add_argument("--which", choices=("petersen", "dodecahedron", "rosette"), required=True)
    gen.set_defaults(func=cmd_gen)

    chk = sub.add_parser("check", help="evaluate properties of a graph")
    chk.add_argument("graph", nargs="?", default="-")
    chk.add_argument("--extendable", type=int, metavar="K")
    chk.add_argument("--factor-critical", action="store_true")
    chk.add_argument("--bicritical", action="store_true")
    chk.add_argument("--elementary", action="store_true")
    chk.add_argument("--tutte", action="store_true")
    chk.add_argument("--connectivity", action="store_true")
    chk.add_argument("--vertex-transitive", action="store_true")
    chk.add_argument("--iso", metavar="OTHER")
    chk.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="edge-subset enumeration cap")
    chk.add_argument("--cap-vertices", type=int, default=20, help="vertex cap for the Tutte search")
    chk.set_defaults(func=cmd_check)

    cls = sub.add_parser("classify", help="predict 2-extendability")
    cls.add_argument("graph", nargs="?", default="-")
    cls.add_argument("--certificate", action="store_true")
    cls.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    cls.set_defaults(func=cmd_classify)

    ver = sub.add_parser("verify", help="full certificate for one graph")
    ver.add_argument("graph", nargs="?", default="-")
    ver.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    ver.set_defaults(func=cmd_verify)

    cen = sub.add_parser("census", help=f"run the census (workers from ${WORKERS_ENV})")
    cen.add_argument("--config")
    cen.add_argument("--out")
    cen.add_argument("--figures", help="directory for CSV/TSV tables and PNG figures")
    cen.add_argument("--no-figures", action="store_true")
    cen.add_argument("--seed", type=int)
    cen.set_defaults(func=cmd_census)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
    except (GraphError, families.FamilyError, ConfigError, CapExceeded, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
