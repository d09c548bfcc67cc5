"""Command-line harness for the integral catalog.

Subcommands
-----------

* ``verify`` - evaluate catalog entries against their closed forms and
  report Pass / Fail / Inconclusive rows (JSON, CSV, or text).
* ``check``  - run the integrability-condition check on the documented
  failure seeds (plus the admissible control seed).
* ``list``   - show catalog contents; ``--json`` output can be fed back
  to ``verify --config`` as a selection filter.

Exit codes: 0 all verified; 1 at least one Fail row; 2 at least one
Inconclusive row (and no Fail); 64 usage error (unknown id, bad
config, bad flag value).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__, catalog, verify
from .errors import UnknownIdError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

_CONFIG_KEYS = {"entry", "group", "seed", "tol", "jobs", "format", "out", "seeds"}


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    raw = os.environ.get("HANKEL_DUAL_JOBS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def _read_config(path: str) -> dict:
    """Flat key=value config; also accepts the JSON emitted by list --json."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config {path!r}: {exc}")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad JSON config {path!r}: {exc}")
        out = {}
        if "entries" in doc:
            out["entry"] = ",".join(e["id"] for e in doc["entries"])
        if "failures" in doc:
            out["seed"] = ",".join(s["id"] for s in doc["failures"])
        return out
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        out[key] = value.strip()
    return out


def _select_entries(entry_ids, group) -> list:
    if entry_ids:
        return [catalog.entry_by_id(i) for i in entry_ids]
    entries = catalog.all_entries()
    if group is not None:
        entries = [e for e in entries if e.group == group]
        if not entries:
            raise UsageError(f"no entries in group {group}")
    return entries


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _report_exit(report: verify.Report) -> int:
    counts = report.counts
    if counts[verify.FAIL]:
        return EXIT_FAIL
    if counts[verify.INCONCLUSIVE]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = _read_config(args.config) if args.config else {}
    entry_ids = list(args.entry or [])
    if not entry_ids and cfg.get("entry"):
        entry_ids = [s for s in cfg["entry"].split(",") if s]
    group = args.group if args.group is not None else (
        int(cfg["group"]) if cfg.get("group") else None
    )
    tol = args.tol if args.tol is not None else (
        float(cfg["tol"]) if cfg.get("tol") else None
    )
    jobs = args.jobs if args.jobs is not None else (
        int(cfg["jobs"]) if cfg.get("jobs") else _default_jobs()
    )
    fmt = args.format or cfg.get("format") or "text"
    out = args.out or cfg.get("out")
    with_seeds = not args.no_seeds
    if cfg.get("seeds", "").lower() in ("0", "false", "no"):
        with_seeds = False

    entries = _select_entries(entry_ids, group)
    if entry_ids or group is not None:
        failures = []
    elif with_seeds:
        failures = catalog.all_failures()
    else:
        failures = []
    if cfg.get("seed"):
        failures = [catalog.failure_by_id(s) for s in cfg["seed"].split(",") if s]

    report = verify.run_all(entries, failures, jobs=jobs, tol=tol)

    if fmt == "json":
        _emit(report.to_json(), out)
    elif fmt == "csv":
        _emit(report.to_csv(), out)
    elif fmt == "text":
        lines = []
        for r in report.rows:
            params = ", ".join(f"{k}={v:g}" for k, v in sorted(r.params.items()))
            lines.append(
                f"{r.status:12s} {r.entry_id:5s} [{params}] "
                f"rel_err={r.rel_err:.3e} tol={r.tolerance:.0e} "
                f"evals={r.evaluations}"
            )
        for r in report.failure_rows:
            lines.append(
                f"{r.status:12s} {r.seed_id:9s} expected={r.expected_endpoint} "
                f"got={r.failing_endpoint}"
            )
        counts = report.counts
        lines.append(
            f"summary: {counts['Pass']} Pass, {counts['Fail']} Fail, "
            f"{counts['Inconclusive']} Inconclusive "
            f"({report.wall_seconds:.1f} s, jobs={jobs})"
        )
        _emit("\n".join(lines), out)
    else:
        raise UsageError(f"unknown format {fmt!r}")
    return _report_exit(report)


def _cmd_check(args) -> int:
    if args.seed:
        seeds = [catalog.failure_by_id(s) for s in args.seed]
    else:
        seeds = catalog.all_failures()
    rows = [verify.verify_failure(s) for s in seeds]
    lines = []
    for r in rows:
        lines.append(
            f"{r.status:12s} {r.seed_id:9s} admissible={r.admissible} "
            f"endpoint={r.failing_endpoint} expected={r.expected_endpoint}"
        )
    from .hankel import check_condition

    control = check_condition(catalog.control_seed())
    control_ok = control.admissible
    lines.append(
        f"{'Pass' if control_ok else 'Fail':12s} control   "
        f"admissible={control.admissible} (exp(-x))"
    )
    if args.json:
        doc = {
            "schema_version": verify.SCHEMA_VERSION,
            "kind": "condition_report",
            "rows": [r.as_dict() for r in rows],
            "control_admissible": control_ok,
        }
        _emit(json.dumps(doc, indent=2), args.out)
    else:
        _emit("\n".join(lines), args.out)
    statuses = [r.status for r in rows]
    if verify.FAIL in statuses or not control_ok:
        return EXIT_FAIL
    if verify.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_list(args) -> int:
    meta = catalog.catalog_metadata()
    if args.group is not None:
        meta["entries"] = [e for e in meta["entries"] if e["group"] == args.group]
        if not meta["entries"]:
            raise UsageError(f"no entries in group {args.group}")
        meta["failures"] = []
    if args.json:
        _emit(json.dumps(meta, indent=2), args.out)
        return EXIT_OK
    lines = []
    for e in meta["entries"]:
        lines.append(
            f"{e['id']:5s} group {e['group']}  {e['tol_class']:12s} "
            f"[{e['provenance']}]  {e['description']}"
        )
    if meta["failures"]:
        lines.append("")
        for s in meta["failures"]:
            lines.append(
                f"{s['id']:9s} fails at {s['expected_endpoint']:9s} "
                f"[{s['provenance']}]  {s['description']}"
            )
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hankel-dual",
        description="Verify dual definite integrals for Bessel functions.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify catalog entries")
    p_verify.add_argument("--entry", action="append", metavar="ID",
                          help="verify only this entry (repeatable)")
    p_verify.add_argument("--group", type=int, help="verify only this group")
    p_verify.add_argument("--tol", type=float,
                          help="override the per-class tolerance")
    p_verify.add_argument("--jobs", type=int,
                          help="worker threads (default HANKEL_DUAL_JOBS or 1)")
    p_verify.add_argument("--format", choices=("text", "json", "csv"))
    p_verify.add_argument("--out", metavar="PATH", help="write output to a file")
    p_verify.add_argument("--config", metavar="PATH",
                          help="flat key=value config, or JSON from 'list --json'")
    p_verify.add_argument("--no-seeds", action="store_true",
                          help="skip the failure-seed condition checks")
    p_verify.set_defaults(func=_cmd_verify)

    p_check = sub.add_parser("check", help="check the integrability condition")
    p_check.add_argument("--seed", action="append", metavar="ID",
                         help="check only this seed (repeatable)")
    p_check.add_argument("--json", action="store_true")
    p_check.add_argument("--out", metavar="PATH")
    p_check.set_defaults(func=_cmd_check)

    p_list = sub.add_parser("list", help="list catalog contents")
    p_list.add_argument("--group", type=int)
    p_list.add_argument("--json", action="store_true")
    p_list.add_argument("--out", metavar="PATH")
    p_list.set_defaults(func=_cmd_list)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; normalize to 64 unless it
        # was --help/--version (exit 0)
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, UnknownIdError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"hankel-dual: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
