"""Figures and delimited tables for census reports.

Rendering uses the non-interactive Agg backend so it works headless.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
from matplotlib import pyplot as plt  # noqa: E402

PALETTE = {"pass": "#3288bd", "fail": "#d53e4f", "unknown": "#fee08b"}

CSV_FIELDS = ("id", "status", "order", "size", "girth", "degree", "vertex_transitive", "prediction",
              "reason", "theorem", "oracle", "agreement", "lambda", "lambda2", "clambda", "zeta",
              "super_cyclic")


def strip_spines(axis, spines=("top", "right")):
    for spine in spines:
        axis.spines[spine].set_visible(False)


def certificate_rows(report: dict) -> list[dict]:
    """One flat row per record of a report (as produced by ``SuiteReport.to_json``)."""
    rows = []
    for rec in report["records"]:
        row = {k: "" for k in CSV_FIELDS}
        row.update(id=rec["id"], status=rec["status"])
        cert = rec.get("certificate")
        if cert:
            fp, verdict, inv = cert["fingerprint"], cert["verdict"], cert["invariants"] or {}
            row.update(order=fp["order"], size=fp["size"], girth=fp["girth"], degree=fp["degree"],
                       vertex_transitive=cert["vertex_transitive"], prediction=verdict["prediction"],
                       reason=verdict["reason"], theorem=verdict["applicable_theorem"],
                       oracle=cert["oracle"]["two_extendable"], agreement=cert["agreement"],
                       **{k: inv.get(k) for k in ("lambda", "lambda2", "clambda", "zeta", "super_cyclic")})
        rows.append({k: "" if v is None else v for k, v in row.items()})
    return rows


def write_table(report: dict, path: str | Path, delimiter: str = ",") -> Path:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, CSV_FIELDS, delimiter=delimiter, lineterminator="\n")
        writer.writeheader()
        writer.writerows(certificate_rows(report))
    return path


def plot_tallies(report: dict, path: str | Path) -> Path:
    """Stacked bars of pass / fail / unresolved counts per theorem."""
    tallies = report["tallies"]
    names = sorted(tallies)
    passes = [tallies[n].get("pass", 0) for n in names]
    fails = [tallies[n].get("fail", 0) for n in names]
    other = [sum(v for k, v in tallies[n].items() if k not in ("pass", "fail")) for n in names]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(names, passes, color=PALETTE["pass"], label="agree")
    ax.bar(names, fails, bottom=passes, color=PALETTE["fail"], label="disagree")
    ax.bar(names, other, bottom=[p + f for p, f in zip(passes, fails)], color=PALETTE["unknown"],
           label="unresolved")
    ax.set_ylabel("graphs")
    ax.legend(frameon=False)
    strip_spines(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def plot_order_girth(report: dict, path: str | Path) -> Path:
    """Order against girth for validated graphs, colored by the oracle's 2-extendability verdict."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for value, color, label in ((True, PALETTE["pass"], "2-extendable"),
                                (False, PALETTE["fail"], "not 2-extendable")):
        pts = [(r["certificate"]["fingerprint"]["order"], r["certificate"]["fingerprint"]["girth"])
               for r in report["records"]
               if r.get("certificate") and r["certificate"]["oracle"]["two_extendable"] is value
               and r["certificate"]["fingerprint"]["girth"] is not None]
        if pts:
            xs, ys = zip(*pts)
            ax.scatter(xs, ys, facecolors="none", edgecolors=color, label=label)
    ax.set_xlabel("order")
    ax.set_ylabel("girth")
    ax.legend(frameon=False)
    strip_spines(ax)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def render_report(report: dict, out_dir: str | Path) -> list[Path]:
    """Write ``certificates.csv``, ``certificates.tsv`` and the two PNG figures into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return [write_table(report, out / "certificates.csv"),
            write_table(report, out / "certificates.tsv", "\t"),
            plot_tallies(report, out / "tallies.png"),
            plot_order_girth(report, out / "order_girth.png")]
