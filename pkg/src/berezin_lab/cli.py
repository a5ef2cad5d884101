"""Command-line interface.

Subcommands:

* ``range``      sample a Berezin range; writes cloud CSV, SVG figure, JSON report
* ``convexity``  range sampling plus the convexity detector and the exact verdict
* ``numrange``   numerical-range boundary of a matrix (ellipse data for 2x2)
* ``orbit``      unitary-orbit diagonal cloud (constructive 2x2 or Haar n x n)
* ``verify``     run the acceptance checks, one pass/fail line per criterion

Exit codes: 0 success, 1 invalid configuration, 2 numerical failure,
3 verification failure.

A flat ``key=value`` config file can override defaults (flags win over the
file); the BEREZIN_LAB_THREADS environment variable caps the worker count
(evaluation is vectorized in-process, so it is recorded and bounded but does
not spawn workers).  Presets ``fig1`` .. ``fig5`` reproduce the bundled
figure configurations end to end.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__, berezin, cplane, figures, numrange, report_io, symbols, unitorbit, verify
from .berezin import GridKind, SamplingGrid, Space
from .errors import (
    BerezinLabError,
    DegenerateError,
    DomainError,
    EigenFailureError,
    PoleError,
)

_SQRT3_4 = math.sqrt(3.0) / 4.0  # Im(0.5 e^{i pi/3})

PRESETS: dict[str, dict] = {
    "fig1": {
        "command": "convexity",
        "space": "fock",
        "symbol": f"elliptic:zeta=0.25+{_SQRT3_4!r}i",
        "title": "Fock range, elliptic zeta = 0.5 exp(i pi/3)",
        "out": "out/fig1",
    },
    "fig2": {
        "command": "convexity",
        "space": "fock",
        "symbol": f"autF:a={math.cos(math.pi / 12)!r}+{math.sin(math.pi / 12)!r}i,b=0",
        "r_max": 8.0,
        "title": "Fock range, automorphism a = exp(i pi/12), b = 0",
        "out": "out/fig2",
    },
    "fig3": {
        "command": "range",
        "space": "fock",
        "panels": [
            {"suffix": "_left", "symbol": "affine:zeta=0.5,a=1", "r_max": 4.0},
            {"suffix": "_right", "symbol": "affine:zeta=0.5,a=10", "r_max": 0.4},
        ],
        "title": "Fock range, affine zeta = 0.5",
        "out": "out/fig3",
    },
    "fig4": {
        "command": "convexity",
        "space": "dirichlet",
        "symbol": "elliptic:zeta=0-1i",
        "title": "Dirichlet range, elliptic zeta = -i",
        "out": "out/fig4",
    },
    "fig5": {
        "command": "convexity",
        "space": "dirichlet",
        "symbol": f"blaschke:alpha=0.25+{_SQRT3_4!r}i",
        "title": "Dirichlet range, Blaschke alpha = 0.5 exp(i pi/3)",
        "out": "out/fig5",
    },
}

_NUMERIC_KEYS = {
    "n_r": int,
    "n_theta": int,
    "r_max": float,
    "tol": float,
    "seed": int,
    "n_pairs": int,
    "n_u": int,
    "n_v": int,
    "haar_samples": int,
    "threads": int,
}


def _read_config_file(path: str) -> dict:
    values: dict = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {line!r} is not key=value")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        values[key] = value.strip()
    for key, cast in _NUMERIC_KEYS.items():
        if key in values:
            values[key] = cast(values[key])
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berezin-lab",
        description="Berezin ranges of composition operators, numerical ranges, and unitary orbits.",
    )
    parser.add_argument("--version", action="version", version=f"berezin-lab {__version__}")
    parser.add_argument("--preset", choices=sorted(PRESETS), help="named figure preset")
    parser.add_argument("--config", help="flat key=value config file (flags take precedence)")

    sub = parser.add_subparsers(dest="command")

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", help="output path prefix (default out/run)")
        p.add_argument("--format", dest="fmt", choices=("csv", "json", "svg"), help="primary cloud format")
        p.add_argument("--seed", type=int, help="seed for all sampling (default 0)")
        p.add_argument("--tol", type=float, help="tolerance override")
        p.add_argument("--title", help="figure title")
        p.add_argument("--preset", choices=sorted(PRESETS), help="named figure preset")
        p.add_argument("--config", help="flat key=value config file (flags take precedence)")

    def add_grid(p: argparse.ArgumentParser) -> None:
        p.add_argument("--space", choices=("fock", "dirichlet"))
        p.add_argument("--symbol", help="e.g. elliptic:zeta=0.5+0.866i, blaschke:alpha=0.25-0.43i, affine:zeta=0.5,a=10")
        p.add_argument("--grid-kind", dest="grid_kind", choices=("polar_plane", "polar_disc"))
        p.add_argument("--n-r", dest="n_r", type=int)
        p.add_argument("--n-theta", dest="n_theta", type=int)
        p.add_argument("--r-max", dest="r_max", type=float)
        p.add_argument("--r-spacing", dest="r_spacing", choices=("uniform", "tanh"))

    p_range = sub.add_parser("range", help="sample a Berezin range")
    add_grid(p_range)
    add_common(p_range)

    p_conv = sub.add_parser("convexity", help="range sampling plus convexity detection")
    add_grid(p_conv)
    p_conv.add_argument("--n-pairs", dest="n_pairs", type=int, help="pair samples for the detector")
    add_common(p_conv)

    p_num = sub.add_parser("numrange", help="numerical range boundary of a matrix")
    p_num.add_argument("--matrix", help="inline matrix, rows separated by ';', entries re+imi")
    p_num.add_argument("--matrix-file", dest="matrix_file", help="matrix text file, one row per line")
    p_num.add_argument("--n-theta", dest="n_theta", type=int, help="boundary directions (default 360)")
    add_common(p_num)

    p_orb = sub.add_parser("orbit", help="unitary-orbit diagonal cloud")
    p_orb.add_argument("--matrix", help="inline matrix, rows separated by ';'")
    p_orb.add_argument("--matrix-file", dest="matrix_file")
    p_orb.add_argument("--n-u", dest="n_u", type=int, help="first sweep grid (default 256)")
    p_orb.add_argument("--n-v", dest="n_v", type=int, help="second sweep grid (default 256)")
    p_orb.add_argument("--haar-samples", dest="haar_samples", type=int, help="Haar sampling instead of the constructive sweep")
    add_common(p_orb)

    p_ver = sub.add_parser("verify", help="run the acceptance checks")
    p_ver.add_argument("--criteria", help="comma-separated criterion numbers (default: all)")
    add_common(p_ver)

    return parser


def _effective_config(argv: list[str] | None) -> dict:
    parser = _build_parser()
    args = vars(parser.parse_args(argv))
    preset = PRESETS.get(args.pop("preset") or "", {})
    file_cfg = _read_config_file(args["config"]) if args.get("config") else {}
    args.pop("config", None)
    flags = {k: v for k, v in args.items() if v is not None}

    config = dict(preset)
    config.update(file_cfg)
    config.update(flags)
    if not config.get("command"):
        raise ValueError("no command given (and no preset implies one)")

    threads = os.environ.get("BEREZIN_LAB_THREADS")
    if threads is not None:
        if not threads.isdigit() or int(threads) < 1:
            raise ValueError(f"BEREZIN_LAB_THREADS must be a positive integer, got {threads!r}")
        config["threads"] = int(threads)
    config.setdefault("threads", 1)
    config.setdefault("out", "out/run")
    config.setdefault("fmt", "csv")
    config.setdefault("seed", 0)
    return config


def _grid_from_config(config: dict, space: Space) -> SamplingGrid:
    default = SamplingGrid.default_for(space)
    kind = GridKind(config.get("grid_kind", default.kind.value))
    return SamplingGrid(
        kind=kind,
        n_r=int(config.get("n_r", default.n_r)),
        n_theta=int(config.get("n_theta", default.n_theta)),
        r_max=float(config.get("r_max", default.r_max)),
        r_spacing=str(config.get("r_spacing", default.r_spacing)),
    )


def _config_echo(config: dict) -> dict:
    echo = {k: v for k, v in sorted(config.items()) if k != "panels"}
    if "panels" in config:
        echo["panels"] = config["panels"]
    return echo


def _cloud_payload(cloud: cplane.PointCloud) -> dict:
    payload = {
        "meta": dict(sorted(cloud.meta.items())),
        "re": [report_io.fmt17(v.real) for v in cloud.points],
        "im": [report_io.fmt17(v.imag) for v in cloud.points],
    }
    if cloud.domain is not None:
        payload["z_re"] = [report_io.fmt17(v.real) for v in cloud.domain]
        payload["z_im"] = [report_io.fmt17(v.imag) for v in cloud.domain]
    return payload


def _emit(config: dict, cloud: cplane.PointCloud, report: dict, hull=None, closed=False) -> list[str]:
    """Write the artifacts selected by --format; returns the paths written."""
    out = config["out"]
    fmt = config["fmt"]
    written = []
    title = config.get("title")
    if title:
        cloud.meta.setdefault("title", title)
    if fmt == "csv":
        written.append(str(report_io.write_csv(cloud, f"{out}.csv")))
    elif fmt == "json":
        report = dict(report)
        report["cloud"] = _cloud_payload(cloud)
    figure = figures.write_svg(cloud, f"{out}.svg", hull=hull, closed_polyline=closed)
    written.append(str(figure))
    if fmt != "svg":
        written.append(str(report_io.write_json_report(report, f"{out}.json")))
    return written


def _base_report(config: dict, command: str) -> dict:
    return {
        "command": command,
        "config": _config_echo(config),
        "version": __version__,
    }


def _run_range_like(config: dict, with_detector: bool) -> int:
    command = "convexity" if with_detector else "range"
    space = Space(config["space"])
    panels = config.get("panels") or [
        {"suffix": "", "symbol": config["symbol"], "r_max": config.get("r_max")}
    ]
    report = _base_report(config, command)
    report["results"] = []
    base_out = config["out"]
    written: list[str] = []
    for panel in panels:
        panel_cfg = dict(config)
        panel_cfg["out"] = base_out + panel.get("suffix", "")
        if panel.get("r_max") is not None:
            panel_cfg["r_max"] = panel["r_max"]
        sym = symbols.parse_symbol(panel["symbol"])
        grid = _grid_from_config(panel_cfg, space)
        cloud = berezin.sample_range(space, sym, grid, seed=int(config["seed"]))
        verdict = berezin.classify_convexity(space, sym)
        result = {
            "symbol": symbols.symbol_text(sym),
            "n_points": len(cloud),
            "classification": verdict.classification.value,
            "reason": verdict.reason,
        }
        hull = None
        if with_detector:
            det = cplane.convexity_report(
                cloud,
                tol=config.get("tol"),
                n_pairs=config.get("n_pairs"),
                seed=int(config["seed"]),
            )
            hull = cplane.convex_hull(cloud)
            result["detector"] = {
                "verdict": det.verdict.value,
                "max_violation": report_io.fmt17(det.max_violation),
                "tolerance": report_io.fmt17(det.tolerance),
                "n_samples": det.n_samples,
                "witness": None
                if det.witness is None
                else {
                    "p": report_io.fmt17(det.witness[0].real) + "," + report_io.fmt17(det.witness[0].imag),
                    "q": report_io.fmt17(det.witness[1].real) + "," + report_io.fmt17(det.witness[1].imag),
                    "t": report_io.fmt17(det.witness[2]),
                },
            }
            print(f"{panel_cfg['out']}: detector={det.verdict.value} exact={verdict.classification.value}")
        else:
            print(f"{panel_cfg['out']}: classification={verdict.classification.value}")
        report["results"].append(result)
        written += _emit(panel_cfg, cloud, dict(report), hull=hull)
    # With several panels the per-panel reports accumulate; write the full one.
    if len(panels) > 1 and config["fmt"] != "svg":
        written.append(str(report_io.write_json_report(report, f"{base_out}.json")))
    for path in written:
        print(f"wrote {path}")
    return 0


def _load_matrix(config: dict) -> np.ndarray:
    if config.get("matrix"):
        return numrange.parse_matrix(config["matrix"])
    if config.get("matrix_file"):
        return numrange.parse_matrix(Path(config["matrix_file"]).read_text(encoding="utf-8"))
    raise ValueError("a matrix is required (--matrix or --matrix-file)")


def _run_numrange(config: dict) -> int:
    mat = _load_matrix(config)
    n_theta = int(config.get("n_theta", 360))
    cloud = numrange.numerical_range_cloud(mat, n_theta)
    report = _base_report(config, "numrange")
    report["results"] = {"n": mat.shape[0], "n_theta": n_theta}
    if mat.shape == (2, 2):
        params = numrange.elliptic_params(mat)
        report["results"]["ellipse"] = {
            "kind": params.kind,
            "center": [report_io.fmt17(params.center.real), report_io.fmt17(params.center.imag)],
            "focus1": [report_io.fmt17(params.focus1.real), report_io.fmt17(params.focus1.imag)],
            "focus2": [report_io.fmt17(params.focus2.real), report_io.fmt17(params.focus2.imag)],
            "major_axis": report_io.fmt17(params.major_axis),
            "minor_axis": report_io.fmt17(params.minor_axis),
            "tilt_mu": report_io.fmt17(params.tilt_mu),
        }
        print(f"numerical range: {params.kind}, foci {params.focus1:.6g} / {params.focus2:.6g}")
    for path in _emit(config, cloud, report, closed=True):
        print(f"wrote {path}")
    return 0


def _run_orbit(config: dict) -> int:
    mat = _load_matrix(config)
    report = _base_report(config, "orbit")
    if config.get("haar_samples"):
        cloud = unitorbit.haar_orbit_cloud(mat, int(config["haar_samples"]), seed=int(config["seed"]))
        mode = "haar"
    else:
        cloud = unitorbit.orbit_cloud_2x2(mat, int(config.get("n_u", 256)), int(config.get("n_v", 256)))
        mode = "constructive"
    tol = config.get("tol") or numrange.default_contains_tol(mat)
    violation = numrange.inclusion_violation(mat, cloud.points)
    results = {
        "mode": mode,
        "n_points": len(cloud),
        "inclusion_tolerance": report_io.fmt17(tol),
        "inclusion_max_violation": report_io.fmt17(violation),
        "all_inside_numerical_range": bool(violation <= tol),
    }
    if mode == "constructive":
        hull = cplane.convex_hull(cloud)
        boundary = numrange.elliptic_params(mat).boundary_points(8192)
        coverage = cplane.hausdorff(cplane.resample_closed_polyline(hull, 8192), boundary)
        results["coverage_hausdorff"] = report_io.fmt17(coverage)
        print(f"orbit: inclusion ok={results['all_inside_numerical_range']}, coverage hausdorff={coverage:.3e}")
    else:
        print(f"orbit: inclusion ok={results['all_inside_numerical_range']}")
    report["results"] = results
    for path in _emit(config, cloud, report):
        print(f"wrote {path}")
    return 0


def _run_verify(config: dict) -> int:
    ids = None
    if config.get("criteria"):
        ids = [int(tok) for tok in str(config["criteria"]).replace(" ", "").split(",") if tok]
    start = time.perf_counter()
    results = verify.run_criteria(ids)
    all_passed = all(r.passed for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  criterion {r.cid:2d}  {r.name}  ({r.seconds:.1f}s)")
        print(f"      {r.detail}")
    print(f"{'OK' if all_passed else 'FAILED'}: {sum(r.passed for r in results)}/{len(results)} criteria "
          f"in {time.perf_counter() - start:.1f}s")
    report = _base_report(config, "verify")
    report["results"] = [
        {"criterion": r.cid, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results
    ]
    report["all_passed"] = all_passed
    path = report_io.write_json_report(report, f"{config['out']}.json")
    print(f"wrote {path}")
    return 0 if all_passed else 3


def run(config: dict) -> int:
    command = config["command"]
    if command == "range":
        return _run_range_like(config, with_detector=False)
    if command == "convexity":
        return _run_range_like(config, with_detector=True)
    if command == "numrange":
        return _run_numrange(config)
    if command == "orbit":
        return _run_orbit(config)
    if command == "verify":
        return _run_verify(config)
    raise ValueError(f"unknown command {command!r}")


def main(argv: list[str] | None = None) -> int:
    try:
        config = _effective_config(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    except (ValueError, OSError, BerezinLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return run(config)
    except (DomainError, OverflowError, PoleError, DegenerateError, EigenFailureError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, BerezinLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
