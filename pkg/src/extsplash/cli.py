"""Command line driver: ``extsplash <command> --q Q [options]``.

Exit status is 0 when every asserted check passes, 1 when one fails and 2 for
configuration errors.  Conjecture findings are printed but never change it.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .errors import GeometryError
from .fields import make_field
from .plane import is_quadrangle, parse_triple, subplane_from_quadrangle
from .splash import splash
from .verify import (
    Section,
    check_census,
    check_field,
    check_models,
    check_projection,
    check_splash,
    check_sublines,
)

DEFAULT_SEED = 20240601
CENSUS_Q = (2, 3)
PROJECT_CENSUS_MAX_Q = 4


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    q: int
    poly: tuple | None
    seed: int
    jobs: int
    fmt: str
    out: str | None
    quad: str | None = None
    line: str | None = None
    census: bool = True
    samples: int | None = None


def _poly(text):
    try:
        parts = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad polynomial {text!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("--poly needs three comma-separated integers t0,t1,t2")
    return parts


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="order of the subfield")
    common.add_argument("--poly", type=_poly, default=None, metavar="t0,t1,t2",
                        help="cubic x^3 - t2 x^2 - t1 x - t0 defining GF(q^3)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="extsplash",
                                description="Exterior splashes of order-q-subplanes of PG(2, q^3).")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("field", parents=[common], help="build and validate GF(q^3)")
    sp = sub.add_parser("splash", parents=[common], help="canonical or user-given splash")
    sp.add_argument("--quad", default=None,
                    help="four points 'P1;P2;P3;P4' spanning the subplane, each as 9 integers")
    sp.add_argument("--line", default=None, help="host line as '[9 integers]'")
    sub.add_parser("models", parents=[common], help="cover / Sherk / linear set equivalence")
    sub.add_parser("sublines", parents=[common], help="the two subline families")
    pp = sub.add_parser("project", parents=[common], help="projection census")
    pp.add_argument("--no-census", dest="census", action="store_false")
    cp = sub.add_parser("census", parents=[common], help="subplanes sharing a splash")
    cp.add_argument("--samples", type=int, default=None)
    sub.add_parser("verify-all", parents=[common], help="every check for one q")
    return p


def _user_splash(ctx, cfg):
    s = Section("splash")
    try:
        quad = [parse_triple(ctx, t) for t in cfg.quad.split(";")]
        L = parse_triple(ctx, cfg.line)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    if len(quad) != 4 or not is_quadrangle(ctx, quad):
        raise ConfigError("--quad must give four points, no three collinear")
    pi = subplane_from_quadrangle(ctx, *quad)
    S = splash(pi, L)
    q = ctx.q
    s.checks["size"] = len(S.points) == (q * q + q + 1 if S.kind == "exterior" else q * q + 1)
    s.data["splash"] = S.to_dict()
    return s


def run_sections(cfg, ctx):
    q = ctx.q
    cmd = cfg.command
    if cmd == "field":
        return [check_field(ctx)]
    if cmd == "splash":
        if cfg.quad or cfg.line:
            if not (cfg.quad and cfg.line):
                raise ConfigError("--quad and --line go together")
            return [_user_splash(ctx, cfg)]
        return [check_splash(ctx, cfg.seed)]
    if cmd == "models":
        return [check_models(ctx)]
    if cmd == "sublines":
        return [check_sublines(ctx)]
    if cmd == "project":
        if cfg.census and q > PROJECT_CENSUS_MAX_Q:
            raise ConfigError(f"projection census runs for q <= {PROJECT_CENSUS_MAX_Q}; use --no-census")
        return [check_projection(ctx, cfg.seed, cfg.census)]
    if cmd == "census":
        if q not in CENSUS_Q:
            raise ConfigError(f"census supports q in {CENSUS_Q}")
        return [check_census(ctx, cfg.seed, cfg.jobs, cfg.samples)]
    if cmd == "verify-all":
        out = [check_field(ctx), check_splash(ctx, cfg.seed), check_models(ctx),
               check_sublines(ctx),
               check_projection(ctx, cfg.seed, q <= PROJECT_CENSUS_MAX_Q)]
        if q in CENSUS_Q:
            out.append(check_census(ctx, cfg.seed, cfg.jobs))
        return out
    raise ConfigError(f"unknown command {cmd}")  # pragma: no cover


def render(cfg, ctx, sections):
    passed = all(s.passed for s in sections)
    if cfg.fmt == "json":
        doc = {"command": cfg.command, "config": {"q": ctx.q, "poly": [ctx.t0, ctx.t1, ctx.t2],
                                                  "seed": cfg.seed},
               "passed": passed, "sections": [s.to_dict() for s in sections]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if cfg.fmt == "csv":
        return _csv(cfg, sections)
    lines = [f"extsplash {cfg.command} q={ctx.q} poly={ctx.t0},{ctx.t1},{ctx.t2} seed={cfg.seed}"]
    for s in sections:
        lines.append(f"== {s.name} ==")
        for name, ok in s.checks.items():
            lines.append(f"{'PASS' if ok else 'FAIL'}  {name}")
        for key in sorted(k for k in s.data if k.startswith("conjecture")):
            lines.append(f"REPORTED {key} " + json.dumps(s.data[key], sort_keys=True))
    lines.append("OVERALL " + ("PASS" if passed else "FAIL"))
    return "\n".join(lines) + "\n"


def _csv(cfg, sections):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    proj = next((s for s in sections if "rows" in s.data), None)
    cens = next((s for s in sections if "report" in s.data), None)
    if cfg.command == "project" and proj is not None:
        cols = ["kind", "size", "projection_points", "orbit_size", "carrier_match"]
        w.writerow(cols)
        for r in proj.data["rows"]:
            w.writerow([r[c] for c in cols])
    elif cfg.command == "census" and cens is not None:
        w.writerow(["splash_index", "splash_size", "subplanes"])
        for i, r in enumerate(cens.data["report"]["per_splash"]):
            w.writerow([i, len(r["splash"]), r["subplanes"]])
    else:
        w.writerow(["section", "check", "status"])
        for s in sections:
            for name, ok in s.checks.items():
                w.writerow([s.name, name, "PASS" if ok else "FAIL"])
    return buf.getvalue()


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(command=args.command, q=args.q, poly=args.poly, seed=args.seed,
                    jobs=max(1, args.jobs), fmt=args.fmt, out=args.out,
                    quad=getattr(args, "quad", None), line=getattr(args, "line", None),
                    census=getattr(args, "census", True), samples=getattr(args, "samples", None))
    try:
        ctx = make_field(cfg.q, cfg.poly)
        sections = run_sections(cfg, ctx)
    except (GeometryError, ConfigError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    text = render(cfg, ctx, sections)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(s.passed for s in sections) else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
