"""Command-line front end.

    nichols dims SPEC [--cap N] [--format json|table]
    nichols verify SPEC --suite {hopf,biderivation,comodule,pairing,pointed}
    nichols unroll SPEC [--cap N] [--out PATH]
    nichols gk SPEC [--cap N]
    nichols pair SPEC [--cap N]

Exit status: 0 when every requested check passes, 1 when a check fails,
2 on usage, parse or construction errors. Reports are deterministic:
identical spec and cap produce byte-identical output."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MissingSectionError, NicholsError, NotFiniteWithinCapError
from .hopf_core import TruncatedHopf, solve_antipode, to_json_dict, verify_hopf
from .nichols import hilbert_series, nichols_truncated, pre_nichols_quotient
from .pairing import (
    contragredient_torus_action,
    graded_dual_pairing,
    lemma_transfer_check,
    verify_action_compatibility,
    verify_hopf_pairing,
)
from .scalars import BACKEND, CycScalar, ZERO
from .specfile import SpecDocument, parse_spec, resolve_realization
from .unrolled import (
    HopfAction,
    action_on_bosonization,
    check_biderivation,
    check_comodule_hopf_via_grading,
    check_module_algebra,
    gk_growth,
    pointed_criterion,
    smash_with_enveloping,
    unrolled_bosonization,
)

REPORT_VERSION = 1

DEFAULT_CAPS = {"dims": 8, "verify": 4, "unroll": 4, "gk": 8, "pair": 4}


def _document(command: str, cap: int, body: dict) -> dict:
    return {"version": REPORT_VERSION, "command": command, "cap": cap, **body}


def _effective_cap(args_cap, doc: SpecDocument, command: str) -> int:
    if args_cap is not None:
        return args_cap
    if doc.cap is not None:
        return doc.cap
    return DEFAULT_CAPS[command]


def _build_quotient(doc: SpecDocument, cap: int):
    if doc.ideal_gens:
        return pre_nichols_quotient(doc.braiding, doc.ideal_gens, cap)
    return nichols_truncated(doc.braiding, cap)


def cmd_dims(doc: SpecDocument, cap: int) -> tuple:
    gq = _build_quotient(doc, cap)
    data = hilbert_series(gq)
    body = {
        "dims": data.dims,
        "finite_within_cap": data.finite_flag,
        "vanishes_from": data.vanishes_from,
        "total_dim": data.total_dim,
        "certificate": data.certificate(),
        "kind": gq.kind,
    }
    if gq.kind == "quotient":
        body["projects_onto_nichols"] = {
            str(n): info.contained_in_kernel for n, info in sorted(gq.pre_nichols_info.items())
        }
        body["strictly_larger_than_nichols"] = {
            str(n): info.strict for n, info in sorted(gq.pre_nichols_info.items())
        }
    return 0, _document("dims", cap, body)


def _dims_table(body: dict) -> str:
    dims = ",".join(str(d) for d in body["dims"])
    if body["finite_within_cap"]:
        return f"{dims} total={body['total_dim']}"
    return f"{dims} (unknown beyond cap)"


def _require_lie(doc: SpecDocument):
    if doc.lie is None:
        raise MissingSectionError("lie", "this command needs a Lie algebra")
    return doc.lie


def _build_unrolled(doc: SpecDocument, cap: int) -> TruncatedHopf:
    lie = _require_lie(doc)
    source = _build_quotient(doc, cap) if doc.ideal_gens else doc.braiding
    return unrolled_bosonization(source, resolve_realization(doc), lie, cap)


def _build_bosonization(doc: SpecDocument, cap: int) -> TruncatedHopf:
    from .hopf_core import bosonize

    return bosonize(_build_quotient(doc, cap), resolve_realization(doc), cap)


def _torus_rows(doc: SpecDocument):
    if doc.lie_source is None or doc.lie_source[0] != "torus":
        return None
    return doc.lie_source[1]


def cmd_verify(doc: SpecDocument, suite: str, cap: int) -> tuple:
    if suite == "hopf":
        H = _build_unrolled(doc, cap) if doc.lie is not None else _build_bosonization(doc, cap)
        H = solve_antipode(H, cap)
        report = verify_hopf(H, cap)
        body = {"suite": suite, "dim": H.dim, "report": report.to_dict()}
        return (0 if report.passed else 1), _document("verify", cap, body)
    if suite == "biderivation":
        lie = _require_lie(doc)
        H = _build_bosonization(doc, cap)
        act = action_on_bosonization(H, lie)
        module_report = check_module_algebra(act, cap)
        bider_report = check_biderivation(act, cap)
        passed = module_report.passed and bider_report.passed
        body = {
            "suite": suite,
            "module_algebra": module_report.to_dict(),
            "biderivation": bider_report.to_dict(),
        }
        return (0 if passed else 1), _document("verify", cap, body)
    if suite == "comodule":
        H = _build_unrolled(doc, cap) if doc.lie is not None else _build_bosonization(doc, cap)
        report = check_comodule_hopf_via_grading(H)
        body = {"suite": suite, "report": report.to_dict()}
        return (0 if report.passed else 1), _document("verify", cap, body)
    if suite == "pairing":
        return _pairing_document(doc, cap, suite="pairing")
    if suite == "pointed":
        lie = _require_lie(doc)
        H = _build_bosonization(doc, cap)
        act = action_on_bosonization(H, lie)
        report = pointed_criterion(H, act)
        body = {"suite": suite, "report": report.to_dict()}
        return (0 if report.passed else 1), _document("verify", cap, body)
    raise MissingSectionError("run", f"unknown suite {suite!r}")


def _pairing_document(doc: SpecDocument, cap: int, suite: str) -> tuple:
    p = graded_dual_pairing(doc.braiding, cap)
    report = verify_hopf_pairing(p, cap)
    passed = report.passed
    body = {
        "suite": suite,
        "pairing": report.to_dict(),
        "nondegenerate_within_cap": report.nondegenerate_within(cap),
    }
    rows = _torus_rows(doc)
    if rows is not None:
        from .braided_space import torus_lie

        hs = rows
        tables = []
        for h in hs:
            act_single = _container_torus_tables(p.left, h)
            tables.append(act_single)
        actL = HopfAction(p.left, torus_lie(hs), tables)
        actR = HopfAction(
            p.right, torus_lie(hs), [_container_torus_tables(p.right, [-x for x in h]) for h in hs]
        )
        compat = verify_action_compatibility(p, actL, actR, cap)
        body["action_compatibility"] = compat.to_dict()
        passed = passed and compat.passed
        if body["nondegenerate_within_cap"] and compat.passed:
            verdict = lemma_transfer_check(p, actL, actR, cap)
            body["transfer"] = verdict.to_dict()
            passed = passed and verdict.left_passed and verdict.right_passed and verdict.agree
    return (0 if passed else 1), _document("pair" if suite == "pair" else "verify", cap, body)


def _container_torus_tables(container: TruncatedHopf, weights) -> list:
    hs = [w if isinstance(w, CycScalar) else CycScalar.from_rational(w) for w in weights]
    table = []
    for i, tag in enumerate(container.tags):
        weight = ZERO
        for e, h in zip(tag.multidegree, hs):
            if e:
                weight = weight + h * e
        table.append({} if weight.is_zero() else {i: weight})
    return table


def cmd_pair(doc: SpecDocument, cap: int) -> tuple:
    return _pairing_document(doc, cap, suite="pair")


def cmd_unroll(doc: SpecDocument, cap: int, out: str | None) -> tuple:
    S = _build_unrolled(doc, cap)
    S = solve_antipode(S, cap)
    report = verify_hopf(S, cap)
    by_level: dict = {}
    for t in S.tags:
        by_level[t.degree] = by_level.get(t.degree, 0) + 1
    body = {
        "dim": S.dim,
        "dim_per_filtration_degree": {str(d): n for d, n in sorted(by_level.items())},
        "verify": report.to_dict(),
        "written": None,
    }
    if out:
        payload = json.dumps(to_json_dict(S), sort_keys=True, indent=1)
        with open(out, "w") as fh:
            fh.write(payload + "\n")
        body["written"] = out
    return (0 if report.passed else 1), _document("unroll", cap, body)


def cmd_gk(doc: SpecDocument, cap: int) -> tuple:
    lie = _require_lie(doc)
    gq = _build_quotient(doc, cap)
    data = hilbert_series(gq)
    if not data.finite_flag:
        raise NotFiniteWithinCapError(
            f"B(V) does not vanish within cap {cap}; growth needs a finite H"
        )
    S = _build_unrolled(doc, cap)
    h_dim = data.total_dim * resolve_realization(doc).group.order
    report = gk_growth(S, h_dim, lie.dim)
    body = report.to_dict()
    table = " ".join(f"f({n})={v}" for n, v in enumerate(report.dims))
    body["table"] = table
    return 0, _document("gk", cap, body)


def _gk_table(body: dict) -> str:
    return (
        body["table"]
        + f"\nfitted degree = {body['fitted_degree']}, f(n) = {body['closed_form']} ({body['note']})"
    )


def _render(document: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=1)
    command = document["command"]
    if command == "dims":
        return _dims_table(document)
    if command == "gk":
        return _gk_table(document)
    lines = [f"{command} (cap {document['cap']})"]
    for key, value in document.items():
        if key in ("version", "command", "cap"):
            continue
        if isinstance(value, dict) and "passed" in value:
            status = "pass" if value["passed"] else "FAIL"
            lines.append(f"  {key}: {status}")
            for entry in value.get("entries", []):
                line = f"    {entry['status']:4} {entry['axiom']} ({entry['cases']} cases)"
                if entry["status"] == "fail":
                    line += f" witness={entry.get('witness')}"
                    line += f" left={entry.get('left')!r} right={entry.get('right')!r}"
                lines.append(line)
        else:
            lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nichols",
        description="Construct and verify Nichols algebras, bosonizations and unrolled Hopf algebras.",
    )
    parser.add_argument("--backend", action="store_true", help="print the scalar backend and exit")
    sub = parser.add_subparsers(dest="command")
    for name, help_text in (
        ("dims", "graded dimensions of B(V) or a pre-Nichols quotient"),
        ("verify", "run a verification suite"),
        ("unroll", "build and serialize the unrolled bosonization"),
        ("gk", "growth degree of the unrolled smash product"),
        ("pair", "graded dual pairing checks"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("spec", help="path to the algebra spec file")
        p.add_argument("--cap", type=int, default=None, help="truncation degree")
        p.add_argument("--format", choices=("json", "table"), default="table")
        if name == "verify":
            p.add_argument(
                "--suite",
                required=True,
                choices=("hopf", "biderivation", "comodule", "pairing", "pointed"),
            )
        if name == "unroll":
            p.add_argument("--out", default=None, help="write the serialized algebra here")
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    if args.backend:
        print(f"scalar backend: {BACKEND}")
        return 0
    if args.command is None:
        parser.print_help()
        return 2
    try:
        with open(args.spec) as fh:
            doc = parse_spec(fh.read())
    except OSError as err:
        print(f"error: cannot read spec: {err}", file=sys.stderr)
        return 2
    except NicholsError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    cap = _effective_cap(args.cap, doc, args.command)
    try:
        if args.command == "dims":
            code, document = cmd_dims(doc, cap)
        elif args.command == "verify":
            code, document = cmd_verify(doc, args.suite, cap)
        elif args.command == "unroll":
            code, document = cmd_unroll(doc, cap, args.out)
        elif args.command == "gk":
            code, document = cmd_gk(doc, cap)
        else:
            code, document = cmd_pair(doc, cap)
    except NicholsError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(_render(document, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
