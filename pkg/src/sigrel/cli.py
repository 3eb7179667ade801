"""Batch entry point: scenarios, coordinates, axiom suites, round trips, separation, translation.

Every command writes ``<command>.json`` and ``<command>.csv`` into ``--out``
and prints the CSV rows to stdout.  With ``--figures`` a PNG is written next to
them.  Exit status is 0 when every check passed, 1 when a check failed and 2
for configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .errors import NonConstructibleExact, SigrelError
from .scalar import DEFAULT_EPS, Backend, backend_named

SCHEMA = "sigrel.cli/1"
EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    seed: int = 0
    samples: int | None = None
    frame_samples: int | None = None
    backend: str | None = None
    eps: float = DEFAULT_EPS
    out: str = "reports"
    scenario: str | None = None
    frame: str | None = None
    axioms: list[str] = field(default_factory=list)
    tu: bool = False
    golden: list[str] | None = None
    spec: str | None = None
    formulas: str | None = None
    particles: int = 4
    signals: int = 8
    witnesses: bool = False
    figures: bool = False

    def validate(self) -> None:
        if self.eps <= 0:
            raise ConfigError("--eps must be positive")
        for name in ("samples", "frame_samples", "particles", "signals"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ConfigError(f"--{name.replace('_', '-')} must be at least 1")
        if self.backend not in (None, "exact", "approx"):
            raise ConfigError(f"unknown backend {self.backend!r}")

    def backend_or(self, default: str) -> Backend:
        return backend_named(self.backend or default, self.eps)

    def samples_or(self, default: int) -> int:
        return self.samples if self.samples is not None else default

    def to_json(self) -> dict:
        # output location is not part of what was computed
        d = asdict(self)
        d.pop("out")
        d.pop("figures")
        return d


@dataclass
class Outcome:
    """A command's report body, its delimited rows, and an optional figure."""

    anchor: str
    body: dict
    rows: list[tuple[str, int, int]]
    figure: Any = None

    @property
    def ok(self) -> bool:
        return all(r[2] == 0 for r in self.rows)


# commands


def _frame_from_arg(cfg: RunConfig, backend: Backend):
    from .minkowski import Event
    from .signalling import frame_from_velocity

    if cfg.frame in (None, "identity"):
        return frame_from_velocity((0, 0, 0), o=Event.of(0, backend=backend), unit=1, backend=backend)
    try:
        data = json.loads(Path(cfg.frame).read_text(encoding="utf-8"))
        origin = Event.from_json(data.get("origin", [0, 0, 0, 0]), backend)
        return frame_from_velocity(data.get("velocity", [0, 0, 0]), o=origin, unit=data.get("unit", 1),
                                   backend=backend)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"cannot read frame {cfg.frame}: {exc}") from exc


def _load_scenario(cfg: RunConfig, backend: Backend):
    from .sigmodel import Scenario, coordinate_fixture

    if cfg.scenario is None:
        return coordinate_fixture(backend)
    try:
        data = json.loads(Path(cfg.scenario).read_text(encoding="utf-8"))
        if cfg.backend is not None:
            data = {**data, "field": cfg.backend}
        return Scenario.from_json(data, eps=cfg.eps)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"cannot read scenario {cfg.scenario}: {exc}") from exc


def cmd_coordinatize(cfg: RunConfig) -> Outcome:
    from .signalling import cord_values
    from .signalling.oracles import cord_oracle

    backend = cfg.backend_or("approx")
    scen = _load_scenario(cfg, backend)
    frame = _frame_from_arg(cfg, scen.backend)
    events = []
    for s in scen.signals:
        for e in ((s.beg,) if s.is_event() else (s.beg, s.end)):
            if e not in events:
                events.append(e)
    records, mismatches, skipped = [], 0, 0
    for i, e in enumerate(events):
        try:
            got = cord_values(frame, e)
        except NonConstructibleExact:
            skipped += 1
            records.append({"index": i, "event": e.to_json(), "status": "not constructible over the rationals"})
            continue
        want = cord_oracle(frame, e)
        ok = all(g == w for g, w in zip(got, want))
        mismatches += not ok
        records.append({"index": i, "event": e.to_json(), "coordinates": [g.to_json() for g in got],
                        "oracle": [w.to_json() for w in want], "status": "ok" if ok else "oracle mismatch"})

    def figure(path: Path):
        from .figures import coordinates

        done = [r for r in records if "coordinates" in r]
        lab = [[float(_num(v)) for v in r["event"]] for r in done]
        mine = [[float(_num(v)) for v in r["coordinates"]] for r in done]
        return coordinates(lab, mine, path)

    return Outcome("coordinates by signal experiments against Lorentz coordinates",
                   {"frame": frame.to_json(), "events": records, "skipped": skipped},
                   [("cord agrees with the Lorentz oracle", len(events) - skipped, mismatches)], figure)


def _num(v) -> float:
    from fractions import Fraction

    return float(Fraction(v)) if isinstance(v, str) and "/" in v else float(v)


def cmd_check_axioms(cfg: RunConfig) -> Outcome:
    from .specrel import AXIOMS, SpecRelModel, check_axiom

    backend = cfg.backend_or("approx")
    axioms = cfg.axioms or [a for a in AXIOMS if cfg.tu or a != "AxSym"]
    unknown = [a for a in axioms if a not in AXIOMS]
    if unknown:
        raise ConfigError(f"unknown axiom(s): {', '.join(unknown)}; choose from {', '.join(AXIOMS)}")
    model = SpecRelModel(backend, tu=cfg.tu)
    samples = cfg.samples_or(50)
    reports, rows = [], []
    for ax in axioms:
        try:
            r = check_axiom(model, ax, samples=samples, seed=cfg.seed)
        except NonConstructibleExact as exc:
            raise ConfigError(f"{ax} needs square roots outside the rationals; use --backend approx ({exc})") from exc
        reports.append(r.to_json())
        rows.append((ax, samples, samples - r.passes))

    def figure(path: Path):
        from .figures import check_counts

        return check_counts(rows, "axiom checks on the reference-frame model", path)

    return Outcome("reference-frame axioms on the interpreted signalling model",
                   {"model": "expanded (unit clocks)" if cfg.tu else "plain", "axioms": reports}, rows, figure)


def cmd_roundtrip(cfg: RunConfig) -> Outcome:
    from .interp import roundtrip_check

    rep = roundtrip_check(cfg.samples_or(100), cfg.seed, cfg.backend_or("approx"), frame_samples=cfg.frame_samples)
    body = rep.to_json()
    rows = [(k, v["checked"], v["mismatches"]) for k, v in body["counts"].items()]

    def figure(path: Path):
        from .figures import check_counts

        return check_counts(rows, "round trips through both interpretations", path)

    return Outcome(body["anchor"], body, rows, figure)


def cmd_tu_separation(cfg: RunConfig) -> Outcome:
    from .interp import axsym_bridge_check, tu_separation
    from .interp.separation import dilation, random_unit_pair
    import random

    from .minkowski import Event

    samples = cfg.samples_or(500)
    sep = tu_separation(cfg.seed, samples, cfg.backend_or("exact"))
    bridge = axsym_bridge_check(min(samples, 100), cfg.seed, cfg.backend_or("approx"))
    rows = [(k, v["checked"], v["failures"]) for k, v in sep.to_json()["counts"].items()]
    rows += [(k, v["checked"], v["failures"]) for k, v in bridge.to_json()["counts"].items()]

    def figure(path: Path):
        from .figures import spacetime_pairs
        from .scalar import EXACT

        d2 = dilation(2)
        o, u = Event.of(0, backend=EXACT), Event.of(1, backend=EXACT)
        e1, e2 = random_unit_pair(random.Random(f"figure:{cfg.seed}"), EXACT)
        pairs = [(o, u, "unit pair"), (d2.event(o), d2.event(u), "after dilation ×2"),
                 (e1 - e1, e2 - e1, "sampled unit pair, moved to 0")]
        return spacetime_pairs([([float(c) for c in p], [float(c) for c in q], lab) for p, q, lab in pairs], path)

    return Outcome("time unit: dilation versus unit Poincaré maps, and AxSym versus Tu",
                   {"separation": sep.to_json(), "axsym_bridge": bridge.to_json()}, rows, figure)


def cmd_translate(cfg: RunConfig) -> Outcome:
    from .interp import GOLDEN_SETS, golden_diff, translate_file
    from .folkit.syntax import to_text

    if cfg.golden is not None:
        sets = cfg.golden or list(GOLDEN_SETS)
        unknown = [s for s in sets if s not in GOLDEN_SETS]
        if unknown:
            raise ConfigError(f"unknown golden set(s): {', '.join(unknown)}; choose from {', '.join(GOLDEN_SETS)}")
        diffs = {s: golden_diff(s) for s in sets}
        rows = [(f"golden {s}", 1, int(bool(d))) for s, d in diffs.items()]
        return Outcome("golden formula files", {"diffs": diffs}, rows)
    if cfg.spec is None or cfg.formulas is None:
        raise ConfigError("translate needs --golden, or --spec NAME and a formula file")
    try:
        text = Path(cfg.formulas).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read {cfg.formulas}: {exc}") from exc
    try:
        out = translate_file(cfg.spec, text)
    except KeyError as exc:
        raise ConfigError(f"unknown interpretation {cfg.spec!r}") from exc
    return Outcome("translation of a formula file", {"spec": cfg.spec,
                                                     "translations": [{"name": n, "text": to_text(f)} for n, f in out]},
                   [("translated formulas", len(out), 0)])


def cmd_scenario_gen(cfg: RunConfig) -> Outcome:
    from .sigmodel import scenario_restrict

    scen = scenario_restrict(cfg.seed, (cfg.particles, cfg.signals), backend=cfg.backend_or("exact"), tu=cfg.tu,
                             with_witnesses=cfg.witnesses)
    return Outcome("finite signalling scenario", {"scenario": scen.to_json()},
                   [("particles", len(scen.particles), 0), ("signals", len(scen.signals), 0)])


COMMANDS = {
    "coordinatize": cmd_coordinatize,
    "check-axioms": cmd_check_axioms,
    "roundtrip": cmd_roundtrip,
    "tu-separation": cmd_tu_separation,
    "translate": cmd_translate,
    "scenario-gen": cmd_scenario_gen,
}


# plumbing


def _rows_csv(rows: Sequence[tuple[str, int, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["check", "checked", "failures", "status"])
    for name, checked, failures in rows:
        w.writerow([name, checked, failures, "pass" if failures == 0 else "FAIL"])
    return buf.getvalue()


def write_reports(cfg: RunConfig, outcome: Outcome) -> list[Path]:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = cfg.command
    report = {"schema": SCHEMA, "command": cfg.command, "anchor": outcome.anchor, "config": cfg.to_json(),
              "ok": outcome.ok, "report": outcome.body}
    paths = [out / f"{stem}.json", out / f"{stem}.csv"]
    paths[0].write_text(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
    paths[1].write_text(_rows_csv(outcome.rows), encoding="utf-8")
    if cfg.command == "scenario-gen":
        paths.append(out / "scenario.json")
        paths[-1].write_text(json.dumps(outcome.body["scenario"], indent=2, sort_keys=True) + "\n", encoding="utf-8")
    if cfg.figures and outcome.figure is not None:
        paths.append(outcome.figure(out / f"{stem}.png"))
    return paths


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int)
    common.add_argument("--backend", choices=("exact", "approx"))
    common.add_argument("--eps", type=float, default=DEFAULT_EPS)
    common.add_argument("--out", default="reports", help="report directory")
    common.add_argument("--figures", action="store_true", help="also write a PNG figure")

    p = argparse.ArgumentParser(prog="sigrel", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("coordinatize", parents=[common], help="coordinates of scenario events in a frame")
    c.add_argument("--scenario", help="scenario JSON (default: a built-in fixture of nine events)")
    c.add_argument("--frame", help="'identity' or a JSON file with velocity, origin, unit")

    c = sub.add_parser("check-axioms", parents=[common], help="sampled axiom checks")
    c.add_argument("--axiom", action="append", dest="axioms", default=[])
    c.add_argument("--tu", action="store_true", help="expanded model: all clocks in the Minkowski unit")

    c = sub.add_parser("roundtrip", parents=[common], help="round trips through both interpretations")
    c.add_argument("--frame-samples", type=int)

    sub.add_parser("tu-separation", parents=[common], help="dilation versus Tu, and AxSym versus unit clocks")

    c = sub.add_parser("translate", parents=[common], help="translate a formula file or diff golden files")
    c.add_argument("formulas", nargs="?")
    c.add_argument("--spec", choices=("lines", "tr", "Tr"))
    c.add_argument("--golden", nargs="*", help="golden sets to diff (all when none given)")

    c = sub.add_parser("scenario", help="finite scenarios")
    gen_sub = c.add_subparsers(dest="action", required=True)
    g = gen_sub.add_parser("gen", parents=[common], help="generate a scenario file")
    g.add_argument("--particles", type=int, default=4)
    g.add_argument("--signals", type=int, default=8)
    g.add_argument("--tu", action="store_true")
    g.add_argument("--witnesses", action="store_true", help="add t = 0 events and pairwise signals")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    command = "scenario-gen" if ns.command == "scenario" else ns.command
    known = {f for f in RunConfig.__dataclass_fields__}
    values = {k: v for k, v in vars(ns).items() if k in known and k != "command"}
    return RunConfig(command=command, **values)


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        outcome = COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"sigrel: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SigrelError as exc:
        print(f"sigrel: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    write_reports(cfg, outcome)
    sys.stdout.write(_rows_csv(outcome.rows))
    return EXIT_OK if outcome.ok else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(config_from_args(ns))


if __name__ == "__main__":
    raise SystemExit(main())
