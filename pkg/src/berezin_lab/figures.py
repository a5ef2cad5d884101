"""Matplotlib rendering of point clouds to SVG files.

Figures use an 800x800 viewport with equal-aspect axes and ticked frames;
scatter dots are kept small so range shapes read as curves/regions.  SVG
output strips the creation date and pins the hash salt, keeping repeated
renders stable.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .cplane import PointCloud

VIEWPORT_PX = 800
_DOT_COLOR = "#1f4e79"
_HULL_COLOR = "#c0392b"

matplotlib.rcParams["svg.hashsalt"] = "berezin-lab"


def default_title(cloud: PointCloud) -> str:
    meta = cloud.meta
    if "title" in meta:
        return meta["title"]
    parts = [meta.get("space"), meta.get("symbol"), meta.get("kind"), meta.get("case")]
    text = " ".join(p for p in parts if p)
    return text or "point cloud"


def write_svg(
    cloud: PointCloud,
    path: str | Path,
    hull: np.ndarray | None = None,
    title: str | None = None,
    xlim: tuple[float, float] | None = None,
    ylim: tuple[float, float] | None = None,
    closed_polyline: bool = False,
) -> Path:
    """Scatter the cloud (optionally with a hull overlay or as a closed
    boundary polyline) and save as SVG; returns the path written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    inches = VIEWPORT_PX / 72.0
    fig, ax = plt.subplots(figsize=(inches, inches))
    try:
        pts = cloud.points
        if closed_polyline and pts.size > 1:
            loop = np.concatenate([pts, pts[:1]])
            ax.plot(loop.real, loop.imag, "-", color=_DOT_COLOR, linewidth=1.0)
        ax.scatter(pts.real, pts.imag, s=2.5, color=_DOT_COLOR, linewidths=0)
        if hull is not None and len(hull) > 0:
            loop = np.concatenate([hull, hull[:1]])
            ax.plot(loop.real, loop.imag, "-", color=_HULL_COLOR, linewidth=1.0)
        ax.set_aspect("equal", adjustable="datalim")
        ax.margins(0.05)
        if xlim is not None:
            ax.set_xlim(*xlim)
        if ylim is not None:
            ax.set_ylim(*ylim)
        ax.set_xlabel("Re")
        ax.set_ylabel("Im")
        ax.set_title(title if title is not None else default_title(cloud))
        ax.grid(True, alpha=0.3)
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    return path
