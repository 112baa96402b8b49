#!/usr/bin/env python3
"""Render rate surfaces emitted by `insdel surface` into PNG figures.

Runs the CLI to produce CSV grids, then draws:
  outer_q{q}.png        combined outer bound with its three projections
  inner_outer_q{q}.png  inner and outer surfaces from two angles
  region_q{q}.png       zero-rate contour of the outer bound (resilience region)
  cone_q{q}.png         linear outer bound, rays from (0, 0, 1) to the region
  spokes_q{q}.png       outer bound with the delta = d/q slices in red

Usage: plot_surface.py [--insdel build/insdel] [--q 5] [--resolution 201] [--out docs/figures]
"""

import argparse
import csv
import subprocess
import tempfile
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def load(path):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    gammas = sorted({float(r["gamma"]) for r in rows})
    deltas = sorted({float(r["delta"]) for r in rows})
    rate = np.array([float(r["rate"]) for r in rows]).reshape(len(deltas), len(gammas))
    return np.array(gammas), np.array(deltas), rate


def emit(insdel, q, bound, resolution, workdir):
    out = Path(workdir) / f"{bound}.csv"
    subprocess.run(
        [insdel, "surface", "--q", str(q), "--bound", bound, "--resolution", str(resolution), "--out", str(out)],
        check=True,
    )
    return load(out)


def axes3d(fig, pos=111):
    ax = fig.add_subplot(pos, projection="3d")
    ax.set_xlabel(r"$\gamma$ (insertions)")
    ax.set_ylabel(r"$\delta$ (deletions)")
    ax.set_zlabel("rate")
    ax.set_zlim(0, 1)
    return ax


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--insdel", default="build/insdel")
    ap.add_argument("--q", type=int, default=5)
    ap.add_argument("--resolution", type=int, default=201)
    ap.add_argument("--out", default="docs/figures")
    args = ap.parse_args()
    q = args.q
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    with tempfile.TemporaryDirectory() as tmp:
        g, d, outer = emit(args.insdel, q, "combined-outer", args.resolution, tmp)
        _, _, inner = emit(args.insdel, q, "inner", args.resolution, tmp)
        _, _, cone = emit(args.insdel, q, "linear-outer", args.resolution, tmp)
    G, D = np.meshgrid(g, d)

    fig = plt.figure(figsize=(8, 6))
    ax = axes3d(fig)
    ax.plot_surface(G, D, outer, cmap="viridis", linewidth=0, antialiased=True, alpha=0.9)
    ax.plot(g, np.zeros_like(g), outer[0, :], color="k", lw=2, label="insertion-only")
    ax.plot(np.zeros_like(d), d, outer[:, 0], color="tab:red", lw=2, label="deletion-only")
    ax.contour(G, D, outer, levels=[1e-9], zdir="z", offset=0, colors="tab:orange")
    ax.set_title(f"Outer bound, q = {q}")
    ax.legend(loc="upper right")
    fig.savefig(out / f"outer_q{q}.png", dpi=130, bbox_inches="tight")
    plt.close(fig)

    fig = plt.figure(figsize=(13, 6))
    for i, (elev, azim) in enumerate([(25, -60), (15, 35)]):
        ax = axes3d(fig, 121 + i)
        ax.plot_surface(G, D, inner, color="tab:blue", linewidth=0, alpha=0.95, shade=True)
        ax.plot_surface(G, D, outer, color="tab:orange", linewidth=0, alpha=0.35, shade=False)
        ax.view_init(elev=elev, azim=azim)
    fig.suptitle(f"Inner (solid) and outer (transparent) bounds, q = {q}")
    fig.savefig(out / f"inner_outer_q{q}.png", dpi=130, bbox_inches="tight")
    plt.close(fig)

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.contourf(G, D, (outer > 0).astype(float), levels=[0.5, 1.5], colors=["#9ecae1"])
    ax.contour(G, D, outer, levels=[1e-9], colors="k")
    ax.set_xlabel(r"$\gamma$")
    ax.set_ylabel(r"$\delta$")
    ax.set_title(f"Resilience region, q = {q}")
    fig.savefig(out / f"region_q{q}.png", dpi=130, bbox_inches="tight")
    plt.close(fig)

    fig = plt.figure(figsize=(8, 6))
    ax = axes3d(fig)
    ax.plot_surface(G, D, cone, cmap="magma", linewidth=0, alpha=0.85)
    ax.contour(G, D, cone, levels=[1e-9], zdir="z", offset=0, colors="k")
    ax.set_title(f"Linear outer bound, q = {q}")
    fig.savefig(out / f"cone_q{q}.png", dpi=130, bbox_inches="tight")
    plt.close(fig)

    fig = plt.figure(figsize=(8, 6))
    ax = axes3d(fig)
    ax.plot_surface(G, D, outer, color="0.8", linewidth=0, alpha=0.6)
    for k in range(q):
        i = int(np.argmin(np.abs(d - k / q)))
        if abs(d[i] - k / q) < 1e-9:
            ax.plot(g, np.full_like(g, d[i]), outer[i, :], color="red", lw=2)
    ax.set_title(rf"Outer bound, q = {q}; slices $\delta = d/q$ in red")
    fig.savefig(out / f"spokes_q{q}.png", dpi=130, bbox_inches="tight")
    plt.close(fig)


if __name__ == "__main__":
    main()
