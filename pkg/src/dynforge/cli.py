"""``dynforge`` command line: search, verify-orbit, census, baseline."""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import replace
from fractions import Fraction

from .config import ConfigError, GAConfig, parse_config
from .dynamics import DegenerateMap, ProjPoint, parse_map
from .fitness import FitnessScore, Scorer, TARGETS
from .ga import ConfigurationError, best_at, random_baseline, run
from .heights import canonical_height, height_gap_constant
from .interpolation import OrbitError, orbit_to_map, validate_orbit
from .invariants import conjugacy_fingerprint, moduli_height, sigma_invariants
from .preperiodic import CensusParams, classify_orbit, detect_dynamical_compression, preperiodic_census

SCHEMA = 1
EXIT_OK, EXIT_CONFIG, EXIT_MISMATCH = 0, 2, 3


def _emit(obj, stream=None) -> None:
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, sort_keys=True) + "\n")


def _flavor(text: str) -> str:
    return {"poly": "polynomial", "polynomial": "polynomial", "rational": "rational"}[text]


def _orbit_arg(text: str) -> list[int]:
    return [int(t) for t in text.replace("[", "").replace("]", "").replace(" ", "").split(",") if t]


def _pair(text: str) -> tuple[int, int]:
    a, b = _orbit_arg(text)
    return a, b


def _load_config(args) -> GAConfig:
    cfg = parse_config(args.config)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed).validate()
    return cfg


def cmd_search(args) -> int:
    cfg = _load_config(args)
    with open(args.out, "w") as fh:
        _emit({"schema": SCHEMA, "type": "config", "config": cfg.to_json()}, fh)

        def on_generation(rec):
            _emit({"schema": SCHEMA, "type": "generation", **rec.to_json()}, fh)
            fh.flush()

        report = run(cfg, callbacks=[on_generation], threads=args.threads)
        _emit({"schema": SCHEMA, "type": "hall_of_fame", "entries": report.hall_of_fame}, fh)
        _emit(
            {
                "schema": SCHEMA,
                "type": "summary",
                "status": report.status,
                "seed": report.seed,
                "rng": report.rng,
                "generations_run": report.history[-1].generation,
                "best_score": report.best.score.to_json()["value"],
                "best_orbit": list(report.best.orbit.entries),
                "evaluations": report.evaluations,
                "unique_evaluations": report.unique_evaluations,
            },
            fh,
        )
    print(
        f"{report.status}: best {report.best.score.to_json()['value']} at {list(report.best.orbit.entries)}"
        f" after {report.evaluations} evaluations in {report.wall_time:.1f}s",
        file=sys.stderr,
    )
    return EXIT_OK


def verify_orbit(degree: int, flavor: str, entries: list[int], target: str, weights=None, rel_eps: float = 1e-4) -> dict:
    """Everything the reference tables report about one orbit, as a JSON-ready record."""
    record: dict = {"schema": SCHEMA, "degree": degree, "map_type": flavor, "orbit": entries, "target": target}
    try:
        orbit = validate_orbit(entries, degree, flavor)
        f = orbit_to_map(orbit)
    except (OrbitError, DegenerateMap) as exc:
        record["error"] = {"reason": getattr(exc, "reason", "degenerate_map"), "message": str(exc)}
        return record
    record["map"] = str(f)
    record["map_forms"] = f.to_json()
    cls = classify_orbit(f, ProjPoint(0, 1))
    record["classification"] = {"status": cls.status}
    if cls.is_preperiodic:
        record["classification"].update(tail_m=cls.tail_m, period_n=cls.period_n)
    record["sigma"] = sigma_invariants(f).as_strings()
    record["moduli_height"] = moduli_height(f)
    record["fingerprint"] = conjugacy_fingerprint(f)
    record["height_gap_constant"] = height_gap_constant(f).C
    if cls.is_preperiodic:
        record["canonical_height"] = {"value": 0.0, "error_bound": 0.0}
        census = preperiodic_census(f)
        record["census"] = census.to_json()
    else:
        h = canonical_height(f, ProjPoint(0, 1), rel_eps=rel_eps, max_iterations=512)
        record["canonical_height"] = {"value": h.value, "error_bound": h.error_bound}
    score = Scorer(target, weights, rel_eps)(orbit)
    record["score"] = score.to_json()["value"]
    record["score_detail"] = score.to_json()["detail"]
    record["dynamical_compression"] = detect_dynamical_compression(orbit)
    return record


def check_expectations(record: dict, args) -> list[str]:
    problems = []
    if "error" in record:
        return [f"interpolation failed: {record['error']['reason']}"]
    if args.expect_map is not None:
        want = parse_map(args.expect_map, record["degree"])
        if want.to_json() != record["map_forms"]:
            problems.append(f"map {record['map']} != {args.expect_map}")
    if args.expect_mn is not None:
        got = record["classification"]
        mn = (got.get("tail_m"), got.get("period_n"))
        if mn != args.expect_mn:
            problems.append(f"(m, n) = {mn} != {args.expect_mn}")
    if args.expect_count is not None:
        count = record.get("census", {}).get("count")
        if count != args.expect_count:
            problems.append(f"count {count} != {args.expect_count}")
    if args.expect_score is not None:
        got = record["score"]
        if got == "WORST" or not math.isclose(got, args.expect_score, rel_tol=args.rel_tol, abs_tol=args.abs_tol):
            problems.append(f"score {got} != {args.expect_score}")
    return problems


def cmd_verify_orbit(args) -> int:
    record = verify_orbit(args.degree, _flavor(args.map_type), args.orbit, args.target, args.weights, args.rel_eps)
    problems = check_expectations(record, args)
    record["verified"] = not problems
    if problems:
        record["mismatches"] = problems
    _emit(record)
    return EXIT_MISMATCH if problems or "error" in record else EXIT_OK


def cmd_census(args) -> int:
    if args.map:
        f = parse_map(args.map)
    else:
        if not args.orbit or not args.degree or not args.map_type:
            print("census needs --map or --degree/--map-type/--orbit", file=sys.stderr)
            return EXIT_CONFIG
        try:
            f = orbit_to_map(validate_orbit(args.orbit, args.degree, _flavor(args.map_type)))
        except (OrbitError, DegenerateMap) as exc:
            _emit({"schema": SCHEMA, "error": {"reason": getattr(exc, "reason", "degenerate_map"), "message": str(exc)}})
            return EXIT_MISMATCH
    params = CensusParams(n_max=args.n_max, h_scan=args.h_scan)
    result = preperiodic_census(f, params)
    _emit({"schema": SCHEMA, "map": str(f), "map_forms": f.to_json(), **result.to_json()})
    return EXIT_OK


def _value(score: FitnessScore | None):
    return "" if score is None else score.to_json()["value"]


def cmd_baseline(args) -> int:
    cfg = _load_config(args)
    cache: dict = {}
    report = run(cfg, threads=args.threads, cache=cache)
    series = random_baseline(cfg, budget=max(report.evaluations, cfg.population * cfg.generations), cache=cache)
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["evaluations", "ga_best", "random_best"])
        for rec in report.history:
            w.writerow([rec.evaluations, _value(rec.score), _value(best_at(series, rec.evaluations))])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dynforge", description="Genetic search for extreme rational dynamical systems.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="run a seeded genetic search and stream JSONL")
    s.add_argument("--config", required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify-orbit", help="interpolate one orbit and report everything about it")
    v.add_argument("--degree", type=int, required=True)
    v.add_argument("--map-type", choices=["poly", "polynomial", "rational"], required=True)
    v.add_argument("--orbit", type=_orbit_arg, required=True, help='e.g. "0,-2,1,-3"')
    v.add_argument("--target", choices=TARGETS, default="height_ratio")
    v.add_argument("--weights", type=_pair, help="w_n,w_m for the cycle/tail targets")
    v.add_argument("--rel-eps", type=float, default=1e-4, help="relative accuracy of canonical heights")
    v.add_argument("--expect-map")
    v.add_argument("--expect-mn", type=_pair)
    v.add_argument("--expect-count", type=int)
    v.add_argument("--expect-score", type=float)
    v.add_argument("--rel-tol", type=float, default=1e-2)
    v.add_argument("--abs-tol", type=float, default=0.0)
    v.set_defaults(func=cmd_verify_orbit)

    c = sub.add_parser("census", help="rational preperiodic points as a graph")
    c.add_argument("--degree", type=int)
    c.add_argument("--map-type", choices=["poly", "polynomial", "rational"])
    c.add_argument("--orbit", type=_orbit_arg)
    c.add_argument("--map", help='map given directly, e.g. "z^2" or "(z^2+1)/(2z)"')
    c.add_argument("--n-max", type=int, default=12)
    c.add_argument("--h-scan", type=int, default=100)
    c.set_defaults(func=cmd_census)

    b = sub.add_parser("baseline", help="GA versus random sampling, best-so-far CSV")
    b.add_argument("--config", required=True)
    b.add_argument("--seed", type=int)
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--out", required=True)
    b.set_defaults(func=cmd_baseline)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ConfigurationError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
