"""The algebra spec-file format: an INI dialect with a [braiding] section,
optional [realization], [lie] and [ideal] sections, and [run] parameters.

    [braiding]
    theta = 2
    q = z(3)^1, z(3)^2 ; 1, z(3)^1        # rows split by ';'

    [realization]                          # optional; derived when absent
    exponents = 3, 3
    g1 = 1, 0
    g2 = 0, 1
    chi1 = z(3)^1, 1
    chi2 = z(3)^2, z(3)^1

    [lie]                                  # optional
    torus = 1, 0 ; 0, 1                    # h-vectors, one D_h per row
    # maps = 0,1;0,0 | 0,0;1,0             # or explicit matrices, '|'-split

    [ideal]                                # optional pre-Nichols generators
    gens = x1*x1, x1*x2 + x2*x1

    [run]                                  # optional defaults for the CLI
    cap = 6
    suites = hopf, biderivation

Unknown sections or keys are rejected. Scalars use the scalar syntax,
ideal generators the element syntax."""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field

from .braided_space import (
    AbelianGroup,
    Character,
    DiagonalBraiding,
    LieAction,
    YDRealization,
    braiding_from_lists,
    character_from_scalars,
    close_under_bracket,
    derive_realization,
    endo_from_lists,
    torus_lie,
    validate_realization,
)
from .errors import NicholsError, SpecParseError
from .render import parse_element, render_tensor_element
from .scalars import CycScalar, parse_scalar, render_scalar

_SUITES = ("hopf", "biderivation", "comodule", "pairing", "pointed")

_ALLOWED_KEYS = {
    "braiding": {"theta", "q"},
    "realization": None,  # validated separately (g1..gN, chi1..chiN, exponents)
    "lie": {"torus", "maps"},
    "ideal": {"gens"},
    "run": {"cap", "suites"},
}


@dataclass
class SpecDocument:
    braiding: DiagonalBraiding
    realization: YDRealization | None  # None: derive on demand (braidings with
    # non-root entries have no principal realization, but dims never needs one)
    lie: LieAction | None
    lie_source: tuple | None  # ("torus", rows) or ("maps", matrices) for rendering
    ideal_gens: list
    cap: int | None
    suites: tuple

    @property
    def realization_given(self) -> bool:
        return self.realization is not None

    def __eq__(self, other):
        if not isinstance(other, SpecDocument):
            return NotImplemented
        return (
            self.braiding == other.braiding
            and self.realization == other.realization
            and self.lie == other.lie
            and self.ideal_gens == other.ideal_gens
            and self.cap == other.cap
            and self.suites == other.suites
        )


def resolve_realization(doc: SpecDocument) -> YDRealization:
    if doc.realization is not None:
        return doc.realization
    return derive_realization(doc.braiding)


def _split_scalars(text: str) -> list:
    return [parse_scalar(part) for part in text.split(",")]


def _split_rows(text: str) -> list:
    return [row for row in (r.strip() for r in text.split(";")) if row]


def parse_spec(text: str) -> SpecDocument:
    parser = configparser.ConfigParser(
        delimiters=("=",), comment_prefixes=("#",), inline_comment_prefixes=("#",), strict=True
    )
    try:
        parser.read_string(text)
    except configparser.Error as err:
        line = getattr(err, "lineno", None)
        raise SpecParseError(str(err), line) from err

    for section in parser.sections():
        if section not in _ALLOWED_KEYS:
            raise SpecParseError(f"unknown section [{section}]")
        allowed = _ALLOWED_KEYS[section]
        if allowed is not None:
            for key in parser[section]:
                if key not in allowed:
                    raise SpecParseError(f"unknown key {key!r} in [{section}]")

    if "braiding" not in parser:
        raise SpecParseError("missing required section [braiding]")
    bsec = parser["braiding"]
    try:
        theta = int(bsec.get("theta", ""))
    except ValueError:
        raise SpecParseError("braiding.theta must be an integer")
    if "q" not in bsec:
        raise SpecParseError("braiding.q is required")
    try:
        rows = [_split_scalars(r) for r in _split_rows(bsec["q"])]
    except ValueError as err:
        raise SpecParseError(f"bad scalar in braiding.q: {err}")
    if len(rows) != theta or any(len(r) != theta for r in rows):
        raise SpecParseError(f"braiding.q must be a {theta}x{theta} matrix")
    braiding = braiding_from_lists(rows)

    realization = None
    if "realization" in parser:
        realization = _parse_realization(parser["realization"], braiding)
        report = validate_realization(realization)
        if not report.passed:
            i, j, lhs, rhs = report.violations[0]
            raise SpecParseError(
                f"realization violates chi_{j}(g_{i}) = q_{i}{j}: {lhs} != {rhs}"
            )

    lie = None
    lie_source = None
    if "lie" in parser:
        lsec = parser["lie"]
        if "torus" in lsec and "maps" in lsec:
            raise SpecParseError("give either lie.torus or lie.maps, not both")
        if "torus" in lsec:
            try:
                hs = [_split_scalars(row) for row in _split_rows(lsec["torus"])]
            except ValueError as err:
                raise SpecParseError(f"bad scalar in lie.torus: {err}")
            if any(len(h) != theta for h in hs):
                raise SpecParseError(f"each torus row needs {theta} entries")
            lie = torus_lie(hs)
            lie_source = ("torus", hs)
        elif "maps" in lsec:
            matrices = []
            for block in lsec["maps"].split("|"):
                try:
                    rows = [_split_scalars(r) for r in _split_rows(block)]
                except ValueError as err:
                    raise SpecParseError(f"bad scalar in lie.maps: {err}")
                if len(rows) != theta or any(len(r) != theta for r in rows):
                    raise SpecParseError(f"each lie map must be {theta}x{theta}")
                matrices.append(endo_from_lists(rows))
            anchor = realization if realization is not None else derive_realization(braiding)
            try:
                lie = close_under_bracket(matrices, anchor)
            except NicholsError as err:
                raise SpecParseError(f"lie.maps: {err}")
            lie_source = ("maps", matrices)
        else:
            raise SpecParseError("[lie] needs a torus or maps key")

    ideal_gens = []
    if "ideal" in parser:
        text_gens = parser["ideal"].get("gens", "")
        for part in text_gens.split(","):
            part = part.strip()
            if not part:
                continue
            try:
                ideal_gens.append(parse_element(part, theta))
            except ValueError as err:
                raise SpecParseError(f"bad ideal generator {part!r}: {err}")

    cap = None
    suites: tuple = ()
    if "run" in parser:
        rsec = parser["run"]
        if "cap" in rsec:
            try:
                cap = int(rsec["cap"])
            except ValueError:
                raise SpecParseError("run.cap must be an integer")
            if cap < 1:
                raise SpecParseError("run.cap must be >= 1")
        if "suites" in rsec:
            suites = tuple(s.strip() for s in rsec["suites"].split(",") if s.strip())
            for s in suites:
                if s not in _SUITES:
                    raise SpecParseError(f"unknown suite {s!r}; choose from {_SUITES}")

    return SpecDocument(
        braiding=braiding,
        realization=realization,
        lie=lie,
        lie_source=lie_source,
        ideal_gens=ideal_gens,
        cap=cap,
        suites=suites,
    )


def _parse_realization(section, braiding: DiagonalBraiding) -> YDRealization:
    theta = braiding.theta
    keys = set(section.keys())
    expected = {"exponents"} | {f"g{i}" for i in range(1, theta + 1)} | {
        f"chi{i}" for i in range(1, theta + 1)
    }
    unknown = keys - expected
    if unknown:
        raise SpecParseError(f"unknown key {sorted(unknown)[0]!r} in [realization]")
    missing = expected - keys
    if missing:
        raise SpecParseError(f"missing key {sorted(missing)[0]!r} in [realization]")
    try:
        exponents = tuple(int(x) for x in section["exponents"].split(","))
    except ValueError:
        raise SpecParseError("realization.exponents must be integers")
    group = AbelianGroup(exponents)
    pairs = []
    for i in range(1, theta + 1):
        try:
            coords = tuple(int(x) for x in section[f"g{i}"].split(","))
        except ValueError:
            raise SpecParseError(f"realization.g{i} must be integers")
        if len(coords) != group.rank:
            raise SpecParseError(f"realization.g{i} needs {group.rank} coordinates")
        try:
            values = _split_scalars(section[f"chi{i}"])
        except ValueError as err:
            raise SpecParseError(f"bad scalar in realization.chi{i}: {err}")
        if len(values) != group.rank:
            raise SpecParseError(f"realization.chi{i} needs {group.rank} values")
        try:
            chi = character_from_scalars(group, values)
        except ValueError as err:
            raise SpecParseError(f"realization.chi{i}: {err}")
        pairs.append((group.element(coords), chi))
    return YDRealization(group, tuple(pairs), braiding)


def render_spec(doc: SpecDocument) -> str:
    """Canonical text for a document; parse_spec(render_spec(doc)) == doc."""
    lines = ["[braiding]", f"theta = {doc.braiding.theta}"]
    q_rows = " ; ".join(
        ", ".join(render_scalar(entry) for entry in row) for row in doc.braiding.q
    )
    lines.append(f"q = {q_rows}")
    if doc.realization_given:
        lines.append("")
        lines.append("[realization]")
        lines.append(
            "exponents = " + ", ".join(str(n) for n in doc.realization.group.exponents)
        )
        for i, (g, chi) in enumerate(doc.realization.pairs, start=1):
            lines.append(f"g{i} = " + ", ".join(str(c) for c in g))
            lines.append(
                f"chi{i} = " + ", ".join(render_scalar(v.scalar()) for v in chi.values)
            )
    if doc.lie_source is not None:
        lines.append("")
        lines.append("[lie]")
        kind, payload = doc.lie_source
        if kind == "torus":
            lines.append(
                "torus = "
                + " ; ".join(", ".join(render_scalar(h) for h in row) for row in payload)
            )
        else:
            blocks = []
            for matrix in payload:
                blocks.append(
                    " ; ".join(", ".join(render_scalar(x) for x in row) for row in matrix)
                )
            lines.append("maps = " + " | ".join(blocks))
    if doc.ideal_gens:
        lines.append("")
        lines.append("[ideal]")
        lines.append("gens = " + ", ".join(render_tensor_element(g) for g in doc.ideal_gens))
    if doc.cap is not None or doc.suites:
        lines.append("")
        lines.append("[run]")
        if doc.cap is not None:
            lines.append(f"cap = {doc.cap}")
        if doc.suites:
            lines.append("suites = " + ", ".join(doc.suites))
    return "\n".join(lines) + "\n"
