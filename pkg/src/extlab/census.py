"""Census of small Cayley graphs plus parametrized family sweeps, cross-validated graph by graph.

Every generated graph ends up in the report exactly once, with status
``validated``, ``duplicate`` (Cayley graphs isomorphic to an earlier one),
``skipped`` (over a size cap) or ``errored``.
"""

from __future__ import annotations

import itertools
import json
import os
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterator

from . import __version__, families
from .classify import UNKNOWN, cross_validate
from .graph import Graph, GraphError, is_connected
from .matching import CapExceeded, is_bicritical, is_elementary_bipartite
from .symmetry import invariant_key, is_isomorphic

SCHEMA_VERSION = 1
WORKERS_ENV = "EXTLAB_WORKERS"


class ConfigError(ValueError):
    pass


DEFAULT_SWEEPS: tuple[dict, ...] = (
    {"family": "exceptional", "which": "(iii)", "n": {"range": [2, 5]}},
    {"family": "exceptional", "which": "(iv)", "n": {"range": [2, 5]}},
    {"family": "gp", "n": {"range": [5, 12]}, "k": 2},
    {"family": "tm", "m": {"range": [2, 6]}, "choice": ["straight", "crossed"]},
    {"family": "cycle", "n": {"range": [6, 16], "step": 2}},
    {"family": "named", "which": ["petersen", "dodecahedron"]},
)


@dataclass(frozen=True)
class SuiteConfig:
    """What the census generates and how hard it is allowed to work.

    ``connection_sizes`` maps a connection-set size to the largest group order
    searched with it. Connectivity reports are computed only for graphs of
    degree at most ``connectivity_max_degree``; ``enumeration_cap`` bounds the
    edge-subset enumerations of the super predicates and ``max_order`` skips
    any graph above it.
    """

    connection_sizes: dict[int, int] = field(default_factory=lambda: {3: 24, 4: 16, 5: 16})
    sweeps: tuple[dict, ...] = DEFAULT_SWEEPS
    max_order: int = 40
    enumeration_cap: int = 200_000
    connectivity_max_degree: int = 3
    workers: int = 1
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        if not self.connection_sizes and not self.sweeps:
            raise ConfigError("nothing to generate")
        for size, order in self.connection_sizes.items():
            if size < 1 or order < 2:
                raise ConfigError(f"bad connection size entry {size}: {order}")
        if self.max_order < 1 or self.enumeration_cap < 1 or self.workers < 1:
            raise ConfigError("caps and worker count must be positive")
        for sweep in self.sweeps:
            if "family" not in sweep:
                raise ConfigError(f"sweep without a family: {sweep!r}")
            if not list(expand_sweep(sweep)):
                raise ConfigError(f"sweep expands to nothing: {sweep!r}")

    @classmethod
    def from_json(cls, data: dict) -> "SuiteConfig":
        known = {"connection_sizes", "sweeps", "max_order", "enumeration_cap",
                 "connectivity_max_degree", "workers", "seed", "out"}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        kwargs = dict(data)
        if "connection_sizes" in kwargs:
            kwargs["connection_sizes"] = {int(k): int(v) for k, v in kwargs["connection_sizes"].items()}
        if "sweeps" in kwargs:
            kwargs["sweeps"] = tuple(kwargs["sweeps"])
        if "workers" not in kwargs:
            kwargs["workers"] = int(os.environ.get(WORKERS_ENV, "1"))
        try:
            return cls(**kwargs)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    def to_json(self) -> dict:
        return {"connection_sizes": {str(k): v for k, v in sorted(self.connection_sizes.items())},
                "sweeps": list(self.sweeps), "max_order": self.max_order,
                "enumeration_cap": self.enumeration_cap,
                "connectivity_max_degree": self.connectivity_max_degree,
                "seed": self.seed}


def expand_sweep(sweep: dict) -> Iterator[dict]:
    """Cartesian expansion; values may be scalars, lists, or ``{"range": [lo, hi], "step": s}``."""
    keys, choices = [], []
    for k, v in sweep.items():
        keys.append(k)
        if isinstance(v, dict) and "range" in v:
            lo, hi = v["range"]
            choices.append(list(range(lo, hi + 1, v.get("step", 1))))
        elif isinstance(v, list) and k not in ("s",):
            choices.append(v)
        else:
            choices.append([v])
    for combo in itertools.product(*choices):
        yield dict(zip(keys, combo))


# --- Cayley census ---------------------------------------------------------------


def census_groups(max_order: int) -> list[families.GroupTable]:
    """Cyclic, dihedral and direct products of these, of even order at most ``max_order``."""
    base = [families.cyclic_group(n) for n in range(2, max_order + 1)]
    base += [families.dihedral_group(n) for n in range(3, max_order // 2 + 1)]
    out = [t for t in base if t.order % 2 == 0]
    for a, b in itertools.combinations_with_replacement(base, 2):
        if a.order * b.order <= max_order and (a.order * b.order) % 2 == 0:
            out.append(families.direct_product(a, b))
    return out


def connection_sets(t: families.GroupTable, size: int) -> Iterator[tuple[int, ...]]:
    """Inverse-closed generating subsets of size ``size`` avoiding the identity, in lexicographic order."""
    elems = [x for x in range(t.order) if x != t.identity]
    blocks = sorted({tuple(sorted({x, t.inverse(x)})) for x in elems})
    for r in range(1, size + 1):
        for chosen in itertools.combinations(blocks, r):
            s = tuple(sorted(x for b in chosen for x in b))
            if len(s) == size and len(t.generated(s)) == t.order:
                yield s


def _cayley_candidates(config: SuiteConfig) -> Iterator[tuple[dict, Graph]]:
    top = max(config.connection_sizes.values(), default=0)
    for t in census_groups(top):
        for size, cap in sorted(config.connection_sizes.items()):
            if t.order > cap:
                continue
            for s in connection_sets(t, size):
                yield {"family": "cayley", "group": t.name, "s": list(s)}, families.cayley(t, s)


# --- validation -----------------------------------------------------------------


def _validate(task: tuple[str, dict, dict, SuiteConfig]) -> dict:
    ident, params, graph_json, config = task
    g = Graph.from_edges(graph_json["n"], [tuple(e) for e in graph_json["edges"]])
    record: dict[str, Any] = {"id": ident, "params": params, "graph": graph_json}
    if g.n > config.max_order:
        return {**record, "status": "skipped", "reason": f"order {g.n} exceeds max_order"}
    if g.n % 2 or not is_connected(g):
        return {**record, "status": "skipped", "reason": "odd order or disconnected"}
    deg = g.regular_degree()
    try:
        cert = cross_validate(g, params, connectivity=deg is not None and deg <= config.connectivity_max_degree,
                              cap=config.enumeration_cap)
    except (GraphError, CapExceeded) as exc:
        return {**record, "status": "errored", "reason": str(exc)}
    record.update(status="validated", certificate=cert.to_json())
    if cert.vertex_transitive:
        record["structure"] = {"elementary_bipartite": is_elementary_bipartite(g),
                               "bicritical": is_bicritical(g)}
    return record


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _ident(params: dict) -> str:
    return json.dumps(params, sort_keys=True, separators=(",", ":"))


def _sort_key(rec: dict) -> tuple:
    fp = rec.get("certificate", {}).get("fingerprint", {})
    return (fp.get("order") or 0, fp.get("size") or 0, fp.get("girth") or 0, rec["id"])


@dataclass
class SuiteReport:
    records: list[dict]
    tallies: dict[str, dict[str, int]]
    timing: dict[str, float]
    environment: dict[str, str]
    config: dict

    @property
    def disagreements(self) -> list[dict]:
        return [r for r in self.records if r.get("certificate", {}).get("agreement") is False]

    def to_json(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "config": self.config, "environment": self.environment,
                "tallies": self.tallies, "records": self.records, "timing": self.timing}


def tally(records: list[dict]) -> dict[str, dict[str, int]]:
    """Pass/fail/unknown counts per applicable theorem, plus the elementary-or-bicritical check."""
    out: dict[str, dict[str, int]] = {}
    for rec in records:
        cert = rec.get("certificate")
        if cert is None:
            continue
        verdict = cert["verdict"]
        if verdict["prediction"] == UNKNOWN:
            bucket, outcome = "unresolved", verdict["reason"] or "unknown"
        else:
            bucket, outcome = verdict["applicable_theorem"], "pass" if cert["agreement"] else "fail"
        out.setdefault(bucket, {}).setdefault(outcome, 0)
        out[bucket][outcome] += 1
        if "structure" in rec:
            ok = rec["structure"]["elementary_bipartite"] or rec["structure"]["bicritical"]
            out.setdefault("dichotomy", {}).setdefault("pass" if ok else "fail", 0)
            out["dichotomy"]["pass" if ok else "fail"] += 1
    return {k: dict(sorted(v.items())) for k, v in sorted(out.items())}


def environment() -> dict[str, str]:
    import numpy
    return {"python": sys.version.split()[0], "platform": platform.platform(),
            "numpy": numpy.__version__, "extlab": __version__}


def run_census(config: SuiteConfig) -> SuiteReport:
    """Generate, deduplicate and cross-validate; records are sorted by fingerprint then id."""
    started = time.perf_counter()
    records: list[dict] = []
    tasks: list[tuple[str, dict, dict, SuiteConfig]] = []

    buckets: dict[tuple, list[tuple[str, Graph]]] = {}
    for params, g in _cayley_candidates(config):
        ident = _ident(params)
        key = invariant_key(g)
        first = next((i for i, h in buckets.get(key, []) if is_isomorphic(g, h)), None)
        if first is not None:
            records.append({"id": ident, "params": params, "status": "duplicate", "duplicate_of": first})
            continue
        buckets.setdefault(key, []).append((ident, g))
        tasks.append((ident, params, _graph_json(g), config))
    generated = time.perf_counter()

    for sweep in config.sweeps:
        for params in expand_sweep(sweep):
            ident = _ident(params)
            try:
                g = families.build(params)
            except (families.FamilyError, GraphError, KeyError) as exc:
                records.append({"id": ident, "params": params, "status": "errored", "reason": str(exc)})
                continue
            tasks.append((ident, params, _graph_json(g), config))

    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            records.extend(pool.map(_validate, tasks))
    else:
        records.extend(map(_validate, tasks))
    records.sort(key=_sort_key)
    finished = time.perf_counter()
    timing = {"generate_seconds": round(generated - started, 3),
              "total_seconds": round(finished - started, 3)}
    return SuiteReport(records, tally(records), timing, environment(), config.to_json())


def default_config(**overrides) -> SuiteConfig:
    overrides.setdefault("workers", int(os.environ.get(WORKERS_ENV, "1")))
    return SuiteConfig(**overrides)

