"""Command-line front end: classify .cay files, build and certify the
M-parameterised products, extract finite generating sets, emit the corpus.

Exit codes: 0 success, 2 parse/usage errors, 3 violated preconditions
(regularity mismatches and membership failures), 4 unstabilised fixpoint.
All JSON output is deterministic: fixed key order, sorted collections,
no timestamps.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .corpus import corpus_generate
from .errors import (
    GeneratorsNotInP,
    MalformedTable,
    NotAssociative,
    NotInP,
    NotPMShaped,
    NotRegular,
    NotSameRegularClass,
    RegularSemigroup,
    StructureViolation,
    UnsupportedParams,
)
from .green import j_decomposition, lki_decomposition
from .intsets import ZSet
from .pm import MSpec, build_pm, noniso_certificate, recover_m
from .semigroup import (
    FiniteSemigroup,
    is_completely_regular,
    is_regular_semigroup,
    n_condition,
    parse_cayley,
)
from .subdirect import (
    SubdirectDescription,
    Unstabilized,
    finite_generating_set,
    is_subdirect,
    structured_closure,
    verify_generation,
)

SCHEMA = 1


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(path: str) -> FiniteSemigroup:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedTable(f"{path}: {exc}") from None
    return parse_cayley(text)


def _verdict(countable: bool, criterion: str) -> dict:
    return {
        "count": "Countable" if countable else "Uncountable",
        "determined_by": criterion,
    }


def classification_report(s: FiniteSemigroup, label: str) -> dict:
    regular = is_regular_semigroup(s)
    completely = is_completely_regular(s)
    ncond = n_condition(s)
    dec = j_decomposition(s)
    j_summary = {
        "class_count": len(dec.classes),
        "classes": [
            {
                "elements": [s.name_of(x) for x in cls],
                "regular": dec.regular[ci],
                "minimal_ideal": ci == dec.minimal_ideal,
            }
            for ci, cls in enumerate(dec.classes)
        ],
        "strictly_below": sorted(list(p) for p in dec.strictly_below),
    }
    lki = None
    if not regular:
        parts = lki_decomposition(s)
        lki = {
            "L": [s.name_of(x) for x in parts.L],
            "K": [s.name_of(x) for x in parts.K],
            "I": [s.name_of(x) for x in parts.I],
        }
    return {
        "schema": SCHEMA,
        "file": label,
        "order": s.order,
        "names": list(s.names) if s.names else None,
        "regular": regular,
        "completely_regular": completely,
        "n_condition": ncond,
        "verdicts": {
            "z_subdirect": _verdict(regular, "regular"),
            "z_subsemigroups": _verdict(completely, "completely_regular"),
            "n_subdirect": _verdict(ncond, "n_condition"),
            "n_subsemigroups": _verdict(completely, "completely_regular"),
        },
        "n_subsemigroups_equals_z_subsemigroups": True,
        "j_summary": j_summary,
        "lki": lki,
    }


def _report_text(report: dict) -> str:
    lines = [f"{report['file']}: order {report['order']}"]
    for key in ("regular", "completely_regular", "n_condition"):
        lines.append(f"  {key}: {'yes' if report[key] else 'no'}")
    for name, verdict in report["verdicts"].items():
        lines.append(
            f"  {name}: {verdict['count']} (by {verdict['determined_by']})"
        )
    if report["lki"]:
        for part in ("L", "K", "I"):
            lines.append(f"  {part}: {' '.join(report['lki'][part]) or '-'}")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    reports = [classification_report(_load(path), path) for path in args.files]
    if args.text:
        for report in reports:
            print(_report_text(report))
    else:
        _emit({"schema": SCHEMA, "reports": reports})
    return 0


_PAIR_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*([^)\s]+)\s*\)")


def parse_generator_pairs(s: FiniteSemigroup, text: str):
    pairs = []
    matches = list(_PAIR_RE.finditer(text))
    if not matches:
        raise MalformedTable(f"no generator pairs in {text!r}")
    for m in matches:
        pairs.append((int(m.group(1)), s.index_of(m.group(2))))
    return pairs


def cmd_fg(args) -> int:
    s = _load(args.file)
    if not is_regular_semigroup(s):
        raise NotRegular(f"{args.file}: the semigroup is not regular")
    gens = parse_generator_pairs(s, args.gens)
    result = structured_closure(s, gens)
    if isinstance(result, Unstabilized):
        _emit(
            {
                "schema": SCHEMA,
                "file": args.file,
                "stabilized": False,
                "rounds": result.rounds,
                "partial_fibers": {
                    s.name_of(x): result.fibers[x - 1].to_json()
                    for x in s.elements
                },
            }
        )
        return 4
    if not is_subdirect(result):
        raise StructureViolation(
            "the closure of the generators is not subdirect in Z x S"
        )
    extracted = finite_generating_set(result)
    certified = verify_generation(result, extracted, window=args.window)
    _emit(
        {
            "schema": SCHEMA,
            "file": args.file,
            "window": args.window,
            "input_generators": [[a, s.name_of(x)] for a, x in sorted(set(gens))],
            "stabilized": True,
            "subdirect": True,
            "fibers": result.fibers_to_json(),
            "extracted_generators": [[a, s.name_of(x)] for a, x in extracted],
            "certified": certified,
        }
    )
    return 0


def _pm_build_payload(path: str, s: FiniteSemigroup, mspec: MSpec) -> dict:
    product = build_pm(s, mspec)
    return {
        "schema": SCHEMA,
        "file": path,
        "mspec": mspec.to_text(),
        "semigroup": {
            "order": s.order,
            "names": list(s.names) if s.names else None,
            "table": [list(row) for row in s.table],
        },
        "lki": {
            "L": [s.name_of(x) for x in product.lki.L],
            "K": [s.name_of(x) for x in product.lki.K],
            "I": [s.name_of(x) for x in product.lki.I],
        },
        "fibers": product.description.fibers_to_json(),
        "subdirect": True,
    }


def cmd_pm(args) -> int:
    if args.action == "build":
        s = _load(args.file)
        _emit(_pm_build_payload(args.file, s, MSpec.parse(args.m1)))
        return 0
    if args.action == "invariant":
        if args.file == "-":
            payload = json.load(sys.stdin)
        else:
            with open(args.file, "r", encoding="utf-8") as fh:
                payload = json.load(fh)
        s = FiniteSemigroup.from_table(
            payload["semigroup"]["table"], payload["semigroup"]["names"]
        )
        labels = {s.name_of(x): x for x in s.elements}
        fibers = [ZSet.empty()] * s.order
        for label, blob in payload["fibers"].items():
            fibers[labels[label] - 1] = ZSet.from_json(blob)
        desc = SubdirectDescription(s, tuple(fibers))
        mspec = recover_m(desc, lki_decomposition(s))
        _emit({"schema": SCHEMA, "mspec": mspec.to_text()})
        return 0
    # certify
    s = _load(args.file)
    m1, m2 = MSpec.parse(args.m1), MSpec.parse(args.m2)
    cert = noniso_certificate(s, m1, m2)
    if cert is None:
        _emit(
            {
                "schema": SCHEMA,
                "file": args.file,
                "m1": m1.to_text(),
                "m2": m2.to_text(),
                "result": "identical",
                "witness": None,
                "witness_in": None,
                "invariant_chain": None,
            }
        )
    else:
        _emit(
            {
                "schema": SCHEMA,
                "file": args.file,
                "m1": cert.m1,
                "m2": cert.m2,
                "result": "distinct",
                "witness": cert.witness,
                "witness_in": "m1" if cert.witness_in_first else "m2",
                "invariant_chain": list(cert.invariant_chain),
            }
        )
    return 0


def cmd_corpus(args) -> int:
    paths = corpus_generate(args.kind, args.params, args.outdir)
    _emit({"schema": SCHEMA, "written": sorted(paths)})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zsd",
        description="finite semigroup classification and Z x S subdirect products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify .cay files")
    p.add_argument("files", nargs="+")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pm", help="three-slice product workflows")
    p.add_argument("action", choices=("build", "invariant", "certify"))
    p.add_argument("file", help=".cay file (build/certify) or product JSON (invariant)")
    p.add_argument("m1", nargs="?", help="M spec, e.g. '0,2,3' or '0,1,+4'")
    p.add_argument("m2", nargs="?", help="second M spec (certify)")
    p.set_defaults(func=cmd_pm)

    p = sub.add_parser("fg", help="finite generating set extraction")
    p.add_argument("file")
    p.add_argument("--gens", required=True, help="pairs like '(1,e),(-1,e)'")
    p.add_argument("-W", "--window", type=int, default=200)
    p.set_defaults(func=cmd_fg)

    p = sub.add_parser("corpus", help="generate .cay corpus files")
    p.add_argument(
        "kind",
        choices=(
            "null",
            "monogenic",
            "semilattice_chain",
            "group",
            "full_transformation",
            "rectangular_band",
            "standard",
        ),
    )
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--outdir", required=True)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "pm":
            if args.action in ("build", "certify") and args.m1 is None:
                print("pm build/certify need an M spec", file=sys.stderr)
                return 2
            if args.action == "certify" and args.m2 is None:
                print("pm certify needs two M specs", file=sys.stderr)
                return 2
        return args.func(args)
    except (
        RegularSemigroup,
        NotRegular,
        NotSameRegularClass,
        GeneratorsNotInP,
        NotInP,
        NotPMShaped,
        StructureViolation,
    ) as exc:
        hint = ""
        if isinstance(exc, RegularSemigroup):
            hint = (
                " (a regular semigroup gives only countably many subdirect"
                " products in Z x S, so no uncountable witness family exists)"
            )
        elif isinstance(exc, NotRegular):
            hint = (
                " (finite generation of subdirect products in Z x S is only"
                " guaranteed for regular semigroups)"
            )
        print(f"error: {exc}{hint}", file=sys.stderr)
        return 3
    except (MalformedTable, NotAssociative, UnsupportedParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
