"""CSV cloud files and JSON reports.

CSV layout: one `# key=value` comment line per metadata entry (sorted), then
a header row, then the data at 17 significant digits so values round-trip
bit-exactly.  Clouds that carry domain samples use
``index,z_re,z_im,b_re,b_im``; matrix clouds use ``index,re,im``.

Reports are plain dictionaries serialized with sorted keys; identical
configuration and seed produce byte-identical files, so no wall-clock data
is ever written into them (timings go to the console).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .cplane import PointCloud
from .errors import InvalidParameterError

CSV_HEADER_DOMAIN = "index,z_re,z_im,b_re,b_im"
CSV_HEADER_PLAIN = "index,re,im"


def fmt17(x: float) -> str:
    """17 significant digits: enough to reproduce any double exactly."""
    return format(float(x), ".17g")


def write_csv(cloud: PointCloud, path: str | Path) -> Path:
    """Write a point cloud; returns the path written."""
    path = Path(path)
    lines = [f"# {key}={value}" for key, value in sorted(cloud.meta.items())]
    if cloud.domain is not None:
        lines.append(CSV_HEADER_DOMAIN)
        for i, (z, b) in enumerate(zip(cloud.domain, cloud.points)):
            lines.append(f"{i},{fmt17(z.real)},{fmt17(z.imag)},{fmt17(b.real)},{fmt17(b.imag)}")
    else:
        lines.append(CSV_HEADER_PLAIN)
        for i, b in enumerate(cloud.points):
            lines.append(f"{i},{fmt17(b.real)},{fmt17(b.imag)}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def read_csv(path: str | Path) -> PointCloud:
    """Inverse of write_csv."""
    meta: dict[str, str] = {}
    header = None
    zs: list[complex] = []
    bs: list[complex] = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
            continue
        if header is None:
            header = line
            if header not in (CSV_HEADER_DOMAIN, CSV_HEADER_PLAIN):
                raise InvalidParameterError(f"unrecognized CSV header {header!r} in {path}")
            continue
        fields = line.split(",")
        if header == CSV_HEADER_DOMAIN:
            zs.append(complex(float(fields[1]), float(fields[2])))
            bs.append(complex(float(fields[3]), float(fields[4])))
        else:
            bs.append(complex(float(fields[1]), float(fields[2])))
    if header is None:
        raise InvalidParameterError(f"no header row in {path}")
    domain = np.array(zs, dtype=np.complex128) if header == CSV_HEADER_DOMAIN else None
    return PointCloud(np.array(bs, dtype=np.complex128), meta, domain=domain)


def write_json_report(payload: dict, path: str | Path) -> Path:
    """Serialize a report dictionary deterministically."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def read_json_report(path: str | Path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))
