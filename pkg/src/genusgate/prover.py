"""CLI orchestration: load the database, cap degrees, prove non-existence.

`prove_genus` runs the full pipeline: degree cap from the analytic
bounds (refined by database assertions), per-field verdicts over every
database field below the bounds, and a global status.  A global
RuledOut is phrased as a theorem only conditionally: on the asserted
completeness of the database and on the correctness of the ingested
degree >= 3 zeta values.  Reports are plain TSV and byte-identical for
identical inputs regardless of worker count.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import os
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from importlib import resources

from mpmath import iv

from . import __version__
from .algebra import DEFAULT_SEED, Polynomial, factor_mod_p, is_prime
from .bounds import DegreeCap, _d_interval, max_degree, odlyzko_C, rootdisc_D
from .fielddb import (
    FieldDatabase,
    FieldRecord,
    load_database,
    validate_record,
)
from .numberfield import make_field, splitting_type
from .ramsearch import (
    DEFAULT_ENUMERATION_CAP,
    Verdict,
    VerdictStatus,
    field_verdict,
    target_product,
)
from .zeta import PrecisionExhausted, ZetaRatio, decide_le, is_squarefree, zagier_quadratic


class GlobalStatus(Enum):
    ALL_RULED_OUT = "AllRuledOut"
    HAS_INCONCLUSIVE = "HasInconclusive"
    HAS_UNPROCESSABLE = "HasUnprocessable"


@dataclass(frozen=True)
class GlobalVerdict:
    genus: int
    cap: DegreeCap
    per_field: tuple[tuple[FieldRecord, Verdict], ...]
    excluded: tuple[FieldRecord, ...]
    status: GlobalStatus
    completeness_assumed: bool


def _within_root_bound(record: FieldRecord, g: int) -> bool:
    """disc^(1/d) <= D(d, g), decided outward: kept when inside the slack."""
    try:
        return decide_le(
            lambda: iv.mpf(record.disc),
            lambda: _d_interval(record.degree, g) ** record.degree)
    except PrecisionExhausted:
        return True


def _verdict_for_record(args) -> Verdict:
    record, genus, cap = args
    K = validate_record(record)
    return field_verdict(K, record.ratio, genus, cap=cap)


def prove_genus(
    g: int,
    db: FieldDatabase,
    workers: int = 1,
    enum_cap: int = DEFAULT_ENUMERATION_CAP,
) -> GlobalVerdict:
    """Run the whole prover for one genus over a validated database."""
    cap = max_degree(g, db)
    included, excluded = [], []
    for record in db.records:
        if record.degree <= cap.effective and _within_root_bound(record, g):
            included.append(record)
        else:
            excluded.append(record)
    jobs = [(record, g, enum_cap) for record in included]
    if workers > 1 and len(jobs) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(pool.map(_verdict_for_record, jobs, chunksize=8))
    else:
        verdicts = [_verdict_for_record(job) for job in jobs]
    per_field = tuple(zip(included, verdicts))
    statuses = {v.status for v in verdicts}
    if VerdictStatus.UNPROCESSABLE in statuses:
        status = GlobalStatus.HAS_UNPROCESSABLE
    elif VerdictStatus.INCONCLUSIVE in statuses:
        status = GlobalStatus.HAS_INCONCLUSIVE
    else:
        status = GlobalStatus.ALL_RULED_OUT
    return GlobalVerdict(
        genus=g, cap=cap, per_field=per_field, excluded=tuple(excluded),
        status=status, completeness_assumed=db.completeness_assumed)


def render_report(gv: GlobalVerdict, db: FieldDatabase) -> str:
    lines = [
        f"# genusgate {__version__} non-existence report",
        f"# genus={gv.genus} inequality_cap={gv.cap.inequality_cap}"
        f" refined_cap={gv.cap.refined_cap} effective_cap={gv.cap.effective}",
        f"# status={gv.status.value}",
        f"# completeness={'assumed' if gv.completeness_assumed else 'NOT-ASSERTED'}"
        + (f" note={db.completeness_note}" if db.completeness_note else ""),
        "# zeta values of degree >= 3 are ingested, not computed; the verdict is"
        " conditional on them",
        f"# fields={len(db.records)} included={len(gv.per_field)}"
        f" excluded_by_bound={len(gv.excluded)}",
        "# columns: field\tzeta\tT\tverdict\treasons\tsurvivors",
    ]
    for record, verdict in gv.per_field:
        t = target_product(gv.genus, record.ratio)
        reasons = ">".join(str(r) for r in verdict.reasons)
        survivors = "|".join(c.render() for c in verdict.survivors)
        lines.append("\t".join([
            record.field_id, f"{record.zeta_num}/{record.zeta_den}",
            "-" if t is None else str(t),
            verdict.status.value, reasons, survivors,
        ]))
    for record in gv.excluded:
        lines.append("\t".join([
            record.field_id, f"{record.zeta_num}/{record.zeta_den}",
            "-", "ExcludedByBound", "", "",
        ]))
    return "\n".join(lines) + "\n"


def packaged_db_path() -> str:
    return str(resources.files("genusgate").joinpath("data/fields.tsv"))


def _load_db(path: str | None) -> FieldDatabase:
    actual = path or packaged_db_path()
    with open(actual, encoding="utf-8") as handle:
        return load_database(handle.read())


def _parse_coeffs(text: str) -> Polynomial:
    return Polynomial(tuple(int(c) for c in text.split(",")))


def _parse_ratio(text: str) -> ZetaRatio:
    num, _, den = text.partition("/")
    return ZetaRatio(Fraction(int(num), int(den or "1")))


def _find_record(db: FieldDatabase, disc: int, coeffs: tuple[int, ...]) -> FieldRecord | None:
    for record in db.records:
        if record.disc == disc and record.coeffs == coeffs:
            return record
    return None


def _shape_lines(shapes) -> list[str]:
    return [f"e={s.e} f={s.f} norm={s.norm}" for s in shapes]


def _exit_code(status: GlobalStatus) -> int:
    return {GlobalStatus.ALL_RULED_OUT: 0,
            GlobalStatus.HAS_INCONCLUSIVE: 1,
            GlobalStatus.HAS_UNPROCESSABLE: 2}[status]


def _cmd_prove(args, seed: int) -> int:
    db = _load_db(args.db)
    for record in db.records:
        validate_record(record)
    gv = prove_genus(args.genus, db, workers=args.workers, enum_cap=args.cap)
    report = render_report(gv, db)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(report)
        print(f"report written to {args.report}")
    else:
        sys.stdout.write(report)
    print(f"{gv.status.value}: genus {args.genus}, "
          f"{len(gv.per_field)} fields examined, cap {gv.cap.effective}")
    return _exit_code(gv.status)


def _cmd_field_verdict(args, seed: int) -> int:
    poly = _parse_coeffs(args.poly)
    overrides = {}
    if args.db or os.path.exists(packaged_db_path()):
        try:
            db = _load_db(args.db)
            record = _find_record(db, args.disc, poly.coeffs)
            if record is not None:
                overrides = {p: list(shapes) for p, shapes in record.overrides}
        except FileNotFoundError:
            pass
    K = make_field(poly, args.disc, overrides=overrides)
    verdict = field_verdict(K, _parse_ratio(args.zeta), args.genus)
    print(f"verdict: {verdict.status.value}")
    for reason in verdict.reasons:
        print(f"  reason: {reason}")
    for survivor in verdict.survivors:
        print(f"  survivor: {survivor.render()}")
    return {VerdictStatus.RULED_OUT: 0, VerdictStatus.INCONCLUSIVE: 1,
            VerdictStatus.UNPROCESSABLE: 2}[verdict.status]


def _cmd_zeta_quad(args, seed: int) -> int:
    if args.disc_max is not None:
        for d in range(2, args.disc_max):
            if is_squarefree(d):
                value = zagier_quadratic(d)
                print(f"{d}\t{value.numerator}/{value.denominator}")
        return 0
    value = zagier_quadratic(args.d)
    print(f"{value.numerator}/{value.denominator}")
    return 0


def _cmd_bounds(args, seed: int) -> int:
    cap = max_degree(args.genus)
    print(f"genus {args.genus}: inequality_cap={cap.inequality_cap}")
    print("d\tC(d)\tD(d)")
    for d in range(1, cap.inequality_cap + 3):
        print(f"{d}\t{odlyzko_C(d):.4f}\t{rootdisc_D(d, args.genus):.4f}")
    return 0


def _cmd_factor(args, seed: int) -> int:
    poly = _parse_coeffs(args.poly)
    if not is_prime(args.prime):
        print(f"error: {args.prime} is not prime", file=sys.stderr)
        return 2
    if args.disc is None:
        fac = factor_mod_p(poly, args.prime, seed=seed)
        shapes = sorted(
            ((mult, irr.degree) for irr, mult in fac.factors),
            key=lambda ef: (ef[1], ef[0]))
        for e, f in shapes:
            print(f"e={e} f={f} norm={args.prime ** f}")
        return 0
    overrides = {}
    try:
        db = _load_db(args.db)
        record = _find_record(db, args.disc, poly.coeffs)
        if record is not None:
            overrides = {p: list(shapes) for p, shapes in record.overrides}
    except FileNotFoundError:
        pass
    K = make_field(poly, args.disc, overrides=overrides)
    for line in _shape_lines(splitting_type(K, args.prime, seed=seed)):
        print(line)
    return 0


def _cmd_validate_db(args, seed: int) -> int:
    with open(args.path, encoding="utf-8") as handle:
        db = load_database(handle.read())
    errors = 0
    for record in db.records:
        try:
            validate_record(record)
        except Exception as exc:  # report every bad row, not just the first
            errors += 1
            print(f"line {record.lineno} ({record.field_id}): {exc}")
    print(f"{len(db.records) - errors}/{len(db.records)} records valid; "
          f"assertions: {len(db.no_field_assertions)} no-fields, "
          f"completeness {'asserted' if db.completeness_assumed else 'absent'}")
    return 0 if errors == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusgate",
        description="Non-existence prover for congruence surfaces from maximal orders")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", help="prove non-existence for a genus")
    p.add_argument("genus", type=int)
    p.add_argument("--db", help="field database path (default: bundled)")
    p.add_argument("--report", help="write the TSV report here")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP,
                   help="enumeration cap on the target product")
    p.set_defaults(func=_cmd_prove)

    p = sub.add_parser("field-verdict", help="verdict for a single field")
    p.add_argument("--poly", required=True, help="ascending coefficients, comma-separated")
    p.add_argument("--zeta", required=True, help="genus factor num/den")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--db", help="database supplying overrides")
    p.set_defaults(func=_cmd_field_verdict)

    p = sub.add_parser("zeta-quad", help="exact zeta_K(-1)/2 for Q(sqrt(d))")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("--disc-max", type=int,
                   help="list values for all squarefree d below this bound")
    p.set_defaults(func=_cmd_zeta_quad)

    p = sub.add_parser("bounds", help="root-discriminant bound table and degree cap")
    p.add_argument("genus", type=int)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("factor", help="splitting shapes of a prime")
    p.add_argument("--poly", required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--disc", type=int,
                   help="validate as a field and use true splitting (with overrides)")
    p.add_argument("--db", help="database supplying overrides")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("validate-db", help="validate every database record")
    p.add_argument("path")
    p.set_defaults(func=_cmd_validate_db)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    seed = DEFAULT_SEED
    env_seed = os.environ.get("GENUSGATE_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            print(f"warning: ignoring non-integer GENUSGATE_SEED={env_seed!r}",
                  file=sys.stderr)
    if args.command == "zeta-quad" and args.d is None and args.disc_max is None:
        print("zeta-quad: give d or --disc-max", file=sys.stderr)
        return 2
    try:
        return args.func(args, seed)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
