"""Parse, validate, and serve the field database.

File format (TSV, LF endings, one record per line):

    degree TAB disc TAB coeffs TAB zeta [TAB overrides [TAB flags]]

where coeffs is a comma-separated ascending coefficient list of a monic
generator, zeta is "num/den" for the exact genus factor
|zeta_K(-1)| / 2^(degree-1) in lowest terms, overrides is
"p:e^f,e^f;p:e^f" (splitting data for primes where the Dedekind
criterion fails), and flags is a comma-separated set of marker strings.

Lines starting with '#' are comments.  Lines starting with '#!' are
pragmas carrying database-level assertions:

    #!asserted-complete: <text>
        The database claims to list every relevant field below the
        analytic bounds; global verdicts are conditional on this.
    #!no-fields degree=D rootdisc<=B
        The totally-real enumeration contains no field of degree D with
        root discriminant <= B (used to refine the degree cap).

Every record must pass `validate_record` (field validation plus the
zeta sanity checks) before use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .algebra import Polynomial
from .numberfield import NumberField, make_field
from .zeta import ZetaRatio, validate_zeta, zagier_e1


class MalformedLine(ValueError):
    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


class DuplicateField(ValueError):
    def __init__(self, lineno: int, key):
        super().__init__(f"line {lineno}: duplicate field {key}")
        self.lineno = lineno
        self.key = key


class ZetaOutOfBounds(ValueError):
    """Ingested genus factor violates the functional-equation window."""


class ZagierMismatch(ValueError):
    """Quadratic record disagrees with Zagier's exact value."""


@dataclass(frozen=True)
class FieldRecord:
    degree: int
    disc: int
    coeffs: tuple[int, ...]
    zeta_num: int
    zeta_den: int
    overrides: tuple[tuple[int, tuple[tuple[int, int], ...]], ...] = ()
    flags: frozenset = frozenset()
    lineno: int = 0

    @property
    def key(self) -> tuple:
        return (self.degree, self.disc, self.coeffs)

    @property
    def ratio(self) -> ZetaRatio:
        return ZetaRatio(Fraction(self.zeta_num, self.zeta_den))

    @property
    def field_id(self) -> str:
        return f"{self.degree}:{self.disc}"


@dataclass
class FieldDatabase:
    """Parsed database: records in file order plus document-level assertions."""

    records: list[FieldRecord]
    no_field_assertions: dict[int, Fraction] = field(default_factory=dict)
    completeness_note: str | None = None
    document: list[tuple[str, object]] = field(default_factory=list)

    @property
    def completeness_assumed(self) -> bool:
        return self.completeness_note is not None


def _parse_overrides(text: str, lineno: int):
    out = []
    for group in text.split(";"):
        if not group:
            raise MalformedLine(lineno, "empty override group")
        head, _, body = group.partition(":")
        try:
            p = int(head)
        except ValueError:
            raise MalformedLine(lineno, f"bad override prime {head!r}") from None
        shapes = []
        for item in body.split(","):
            e_text, sep, f_text = item.partition("^")
            if not sep:
                raise MalformedLine(lineno, f"override entry {item!r} is not e^f")
            try:
                e, f = int(e_text), int(f_text)
            except ValueError:
                raise MalformedLine(lineno, f"override entry {item!r} is not e^f") from None
            if e < 1 or f < 1:
                raise MalformedLine(lineno, f"override entry {item!r} out of range")
            shapes.append((e, f))
        out.append((p, tuple(shapes)))
    return tuple(out)


def _parse_record(line: str, lineno: int) -> FieldRecord:
    parts = line.split("\t")
    if len(parts) < 4:
        raise MalformedLine(lineno, f"expected at least 4 columns, got {len(parts)}")
    if len(parts) > 6:
        raise MalformedLine(lineno, f"expected at most 6 columns, got {len(parts)}")
    try:
        degree = int(parts[0])
        disc = int(parts[1])
    except ValueError:
        raise MalformedLine(lineno, "degree and disc must be integers") from None
    if degree < 1:
        raise MalformedLine(lineno, f"degree {degree} must be positive")
    if disc <= 0:
        raise MalformedLine(lineno, f"disc {disc} must be positive")
    try:
        coeffs = tuple(int(c) for c in parts[2].split(","))
    except ValueError:
        raise MalformedLine(lineno, f"bad coefficient list {parts[2]!r}") from None
    if len(coeffs) != degree + 1:
        raise MalformedLine(
            lineno, f"{len(coeffs)} coefficients for degree {degree}")
    if coeffs[-1] != 1:
        raise MalformedLine(lineno, "generator must be monic")
    num_text, sep, den_text = parts[3].partition("/")
    if not sep:
        raise MalformedLine(lineno, f"zeta column {parts[3]!r} is not num/den")
    try:
        zeta_num, zeta_den = int(num_text), int(den_text)
    except ValueError:
        raise MalformedLine(lineno, f"zeta column {parts[3]!r} is not num/den") from None
    if zeta_num < 1 or zeta_den < 1:
        raise MalformedLine(lineno, "zeta numerator and denominator must be >= 1")
    if gcd(zeta_num, zeta_den) != 1:
        raise MalformedLine(lineno, f"{zeta_num}/{zeta_den} is not in lowest terms")
    overrides = ()
    if len(parts) >= 5 and parts[4]:
        overrides = _parse_overrides(parts[4], lineno)
    flags = frozenset()
    if len(parts) == 6 and parts[5]:
        flags = frozenset(parts[5].split(","))
    return FieldRecord(degree=degree, disc=disc, coeffs=coeffs,
                       zeta_num=zeta_num, zeta_den=zeta_den,
                       overrides=overrides, flags=flags, lineno=lineno)


def _parse_pragma(line: str, lineno: int, db: FieldDatabase) -> None:
    body = line[2:].strip()
    if body.startswith("asserted-complete:"):
        db.completeness_note = body.partition(":")[2].strip()
        return
    if body.startswith("no-fields"):
        rest = body[len("no-fields"):].strip()
        degree = bound = None
        for token in rest.split():
            if token.startswith("degree="):
                degree = int(token[len("degree="):])
            elif token.startswith("rootdisc<="):
                bound = Fraction(token[len("rootdisc<="):])
        if degree is None or bound is None:
            raise MalformedLine(lineno, f"bad no-fields pragma {line!r}")
        db.no_field_assertions[degree] = bound
        return
    raise MalformedLine(lineno, f"unknown pragma {line!r}")


def parse_table(text: str) -> list[FieldRecord]:
    """Parse record lines (comments and pragmas skipped), rejecting
    duplicates of the (degree, disc, coeffs) key."""
    return load_database(text).records


def load_database(text: str) -> FieldDatabase:
    db = FieldDatabase(records=[])
    seen = set()
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#!"):
            _parse_pragma(line, lineno, db)
            db.document.append(("comment", line))
            continue
        if line.startswith("#"):
            db.document.append(("comment", line))
            continue
        record = _parse_record(line, lineno)
        if record.key in seen:
            raise DuplicateField(lineno, record.key)
        seen.add(record.key)
        db.records.append(record)
        db.document.append(("record", record))
    return db


def render_record(r: FieldRecord) -> str:
    cols = [str(r.degree), str(r.disc),
            ",".join(str(c) for c in r.coeffs),
            f"{r.zeta_num}/{r.zeta_den}"]
    if r.overrides or r.flags:
        cols.append(";".join(
            f"{p}:" + ",".join(f"{e}^{f}" for e, f in shapes)
            for p, shapes in r.overrides))
    if r.flags:
        cols.append(",".join(sorted(r.flags)))
    return "\t".join(cols)


def serialize_database(db: FieldDatabase) -> str:
    """Canonical rendering: comments verbatim, records re-rendered."""
    lines = []
    for kind, payload in db.document:
        if kind == "comment":
            lines.append(payload)
        else:
            lines.append(render_record(payload))
    return "\n".join(lines) + "\n"


def validate_record(r: FieldRecord) -> NumberField:
    """Build the validated field and cross-check the ingested zeta value.

    Quadratic rows must match Zagier's exact value; all rows must land in
    the functional-equation window.  Raises on any violation.
    """
    K = make_field(
        Polynomial(r.coeffs), r.disc,
        overrides={p: list(shapes) for p, shapes in r.overrides})
    ratio = r.ratio
    if K.degree == 2 and ratio.value != Fraction(zagier_e1(K.disc), 120):
        raise ZagierMismatch(
            f"{r.field_id}: {ratio} != Zagier value "
            f"{Fraction(zagier_e1(K.disc), 120)}")
    if not validate_zeta(K, ratio):
        raise ZetaOutOfBounds(f"{r.field_id}: {ratio} outside analytic bounds")
    return K
