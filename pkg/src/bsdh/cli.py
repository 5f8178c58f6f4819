"""Command line front end.

Subcommands:
  coh           cohomology profile of a line bundle on a BSDH variety
  rigidity      rigidity verdict for a reduced word of the longest element
  verify-paper  run the bundled fixture corpus against the engine

Exit codes: 0 success / decided, 1 error or mismatch, 2 undecided.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from fractions import Fraction

from . import coh, rigidity, rootsys, weyl
from .rootsys import WeightVec

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures.jsonl")


def _parse_sys(tag: str):
    tag = tag.strip().upper()
    series, rank = tag[0], int(tag[1:])
    return rootsys.build_root_system(series, rank)


def _parse_word(text: str):
    return tuple(int(t) for t in text.replace(" ", "").split(",") if t)


def _parse_weight(sys_, text: str) -> WeightVec:
    parts = [Fraction(t) for t in text.replace(" ", "").split(",") if t]
    if len(parts) != sys_.rank:
        raise ValueError(
            "weight needs %d coordinates, got %d" % (sys_.rank, len(parts))
        )
    return WeightVec(tuple(parts))


def _coxeter_word(sys_, text: str):
    seq = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    c = weyl.coxeter_from_decreasing_seq(sys_, seq)
    return weyl.w0_expression_from_coxeter(sys_, c)


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _char_text(ch):
    items = sorted(ch.items(), key=lambda kv: tuple(kv[0].coords))
    return ", ".join(
        "%s x%d" % ("(" + ",".join(str(c) for c in w.coords) + ")", m)
        if m != 1
        else "(" + ",".join(str(c) for c in w.coords) + ")"
        for w, m in items
    ) or "0"


def cmd_coh(args) -> int:
    sys_ = _parse_sys(args.sys)
    word = _parse_word(args.word)
    if args.alpha is not None:
        seed = sys_.simple_root(args.alpha)
    else:
        seed = _parse_weight(sys_, args.seed)
    profile = coh.line_bundle_coh(sys_, word, seed)
    lines = ["word: %s  seed: %s" % (",".join(map(str, word)), _char_text({seed: 1}))]
    degs = sorted(profile.chars) or [0]
    for d in degs:
        lines.append("H^%d: %s" % (d, _char_text(profile.char(d))))
    if profile.ambiguous():
        lines.append("ambiguity events: %d" % len(profile.ambiguity_log))
    _emit(args, profile.to_json(), lines)
    return 0


def cmd_rigidity(args) -> int:
    sys_ = _parse_sys(args.sys)
    if args.coxeter:
        word = _coxeter_word(sys_, args.coxeter)
    else:
        word = _parse_word(args.word)
    report = rigidity.rigidity_verdict(sys_, word)
    cert = report.certificate
    lines = [
        "word: %s" % ",".join(map(str, word)),
        "verdict: %s" % report.verdict,
    ]
    if cert.kind == "nonrigid":
        lines.append(
            "certificate: prefix %s, weights %s"
            % (
                cert.prefix,
                "; ".join(
                    "(" + ",".join(str(c) for c in w.coords) + ")"
                    for w in (cert.weights or (cert.weight,))
                ),
            )
        )
        lines.append("  " + cert.detail)
    elif cert.kind == "undecided":
        lines.append(
            "open weights: %s"
            % "; ".join(
                "(" + ",".join(str(c) for c in w.coords) + ")"
                for w in cert.open_weights
            )
        )
    lines.append("seconds: %.3f" % report.seconds)
    _emit(args, report.to_json(), lines)
    return 2 if report.verdict == "Undecided" else 0


def load_fixtures(path=FIXTURES, only=""):
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            r = json.loads(line)
            if only and only not in r["id"]:
                continue
            out.append(r)
    out.sort(key=lambda r: r["id"])
    return out


def check_fixture(record) -> dict:
    sys_ = _parse_sys(record["sys"])
    seed = WeightVec(tuple(Fraction(c) for c in record["seed"]))
    profile = coh.line_bundle_coh(sys_, tuple(record["word"]), seed)
    got = {
        tuple(int(c) for c in w.coords): m
        for w, m in profile.char(record["degree"]).items()
    }
    expected = {tuple(w): m for w, m in record["expected"]}
    return {
        "id": record["id"],
        "disputed": record["disputed"],
        "match": got == expected,
        "got": sorted([list(w), m] for w, m in got.items()),
        "expected": sorted([list(w), m] for w, m in expected.items()),
        "note": record.get("note", ""),
    }


def cmd_verify_paper(args) -> int:
    fixtures = load_fixtures(only=args.only)
    if not fixtures:
        print("no fixtures selected", file=sys.stderr)
        return 1
    jobs = int(os.environ.get("BSDH_JOBS", "1"))
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(check_fixture, fixtures))
    else:
        results = [check_fixture(r) for r in fixtures]
    results.sort(key=lambda r: r["id"])
    passed = sum(1 for r in results if r["match"] and not r["disputed"])
    failed = [r for r in results if not r["match"] and not r["disputed"]]
    disputed = [r for r in results if r["disputed"]]
    lines = []
    for r in results:
        if r["disputed"]:
            status = "DISPUTED-" + ("MATCH" if r["match"] else "MISMATCH")
        else:
            status = "PASS" if r["match"] else "FAIL"
        lines.append("%-18s %s" % (status, r["id"]))
        if not r["match"]:
            lines.append("    expected %s" % r["expected"])
            lines.append("    got      %s" % r["got"])
            if r["note"]:
                lines.append("    note: %s" % r["note"])
    lines.append(
        "%d passed, %d failed, %d disputed (%d of those match)"
        % (
            passed,
            len(failed),
            len(disputed),
            sum(1 for r in disputed if r["match"]),
        )
    )
    payload = {
        "passed": passed,
        "failed": [r["id"] for r in failed],
        "disputed": [
            {"id": r["id"], "match": r["match"], "note": r["note"]}
            for r in disputed
        ],
        "results": results,
    }
    _emit(args, payload, lines)
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="bsdh",
        description="cohomology and rigidity of Bott-Samelson varieties",
    )
    p.add_argument("--format", choices=("json", "text"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("coh", help="line bundle cohomology profile")
    pc.add_argument("--sys", required=True, help="root system tag, e.g. F4")
    pc.add_argument("--word", required=True, help="comma separated indices")
    g = pc.add_mutually_exclusive_group(required=True)
    g.add_argument("--alpha", type=int, help="seed with a simple root")
    g.add_argument("--seed", help="seed weight in root coordinates")
    pc.set_defaults(func=cmd_coh)

    pr = sub.add_parser("rigidity", help="rigidity verdict for a w_0 word")
    pr.add_argument("--sys", required=True)
    g = pr.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", help="reduced word for the longest element")
    g.add_argument(
        "--coxeter",
        help="decreasing sequence defining a Coxeter element, e.g. 3,2,1",
    )
    pr.set_defaults(func=cmd_rigidity)

    pv = sub.add_parser("verify-paper", help="run the fixture corpus")
    pv.add_argument("--only", default="", help="substring filter on fixture ids")
    pv.set_defaults(func=cmd_verify_paper)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, coh.TowerError, rigidity.LedgerContradiction) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
