"""Batch verification of the bounds over a corpus of graphs."""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from fanforge.errors import FanforgeError, TheoremViolation
from fanforge.families import contractible_edges, h_contractible_edges
from fanforge.fans import find_triangles
from fanforge.graph import Multigraph, is_3_connected, is_forest
from fanforge.graph6 import decode, encode_graph6, read_file
from fanforge.corpus import named
from fanforge.lifting.forest import extract_forest_report, spanning_fan_decomposition
from fanforge.lifting.induction import build_fan_family
from fanforge.minors import K1, contains_minor
from fanforge.oracle import oracle_check_family

REPORT_VERSION = 1
SUITES = ("ando", "main", "main2", "main3", "structural")


def load_input(spec: str) -> list:
    """``[(id, graph)]`` from a graph6/sparse6 file or a named-family spec."""
    if os.path.exists(spec):
        return [(f"line {no}", g) for no, g in read_file(spec)]
    return named(spec)


def load_minor(spec: str) -> Multigraph:
    if spec.lower() == "k1":
        return K1
    if os.path.exists(spec):
        graphs = read_file(spec)
        if len(graphs) != 1:
            raise FanforgeError("minor file must hold exactly one graph")
        return graphs[0][1]
    try:
        return named(spec)[0][1]
    except ValueError:
        return decode(spec)


def _ceil_half(a: int) -> int:
    return (a + 1) // 2


def _bound(value, bound) -> dict:
    return {"value": value, "bound": bound, "pass": value >= bound}


def check_graph(gid, g, h, suites) -> tuple:
    """One record and its timings; every verdict is recomputed here.

    A construction that raises counts as a failure of the suites it feeds.
    """
    try:
        return _check_graph(gid, g, h, suites)
    except TheoremViolation as exc:
        rec = {"id": gid, "order": g.order, "size": g.size,
               "bounds": {s: {"pass": False, "error": str(exc)} for s in suites}}
        return rec, {}


def _check_graph(gid, g, h, suites) -> tuple:
    rec = {"id": gid, "order": g.order, "size": g.size, "bounds": {}}
    times = {}
    if not g.is_simple() or not is_3_connected(g):
        rec["skipped"] = "not simple and 3-connected"
        return rec, times
    if h.order > 1 and not contains_minor(g, h):
        rec["skipped"] = "h is not a minor"
        return rec, times
    d = g.order - h.order

    t = time.perf_counter()
    cc = contractible_edges(g)
    rec["contractible"] = len(cc)
    rec["ando_bound"] = _ceil_half(g.order)
    if "ando" in suites:
        rec["bounds"]["ando"] = _bound(len(cc), _ceil_half(g.order))
    times["ando"] = time.perf_counter() - t

    fam = None
    if {"main", "main2", "main3"} & set(suites):
        t = time.perf_counter()
        fam = build_fan_family(g, h)
        problems = oracle_check_family(g, h, fam)
        rec["family_rank"] = fam.rank
        rec["family"] = [sorted(m) for m in fam.members]
        if "main" in suites:
            res = _bound(fam.rank if not problems else -1, d)
            if problems:
                res["problems"] = problems
            rec["bounds"]["main"] = res
        times["main"] = time.perf_counter() - t

    hc = h_contractible_edges(g, h)
    if "main2" in suites and d >= 1:
        t = time.perf_counter()
        edges = extract_forest_report(g, h, fam, d).edges
        ok = is_forest(g, edges) and edges <= hc
        rec["forest_size"] = len(edges)
        rec["bounds"]["main2"] = _bound(len(edges) if ok else -1, _ceil_half(d + 1))
        times["main2"] = time.perf_counter() - t

    if "main3" in suites and not find_triangles(g):
        t = time.perf_counter()
        singles = all(len(m) == 1 for m in fam.members)
        edges = fam.union
        ok = singles and is_forest(g, edges) and edges <= hc
        rec["bounds"]["main3"] = _bound(len(edges) if ok else -1, d)
        times["main3"] = time.perf_counter() - t

    if "structural" in suites and h.order == 1:
        t = time.perf_counter()
        try:
            sub, blocks = spanning_fan_decomposition(g, fam)
            ok = sub.order == g.order
            rec["blocks"] = [sorted(b) for b in blocks]
        except FanforgeError as exc:
            ok = False
            rec["structural_error"] = str(exc)
        rec["bounds"]["structural"] = {"pass": ok}
        times["structural"] = time.perf_counter() - t
    return rec, times


def _plain(g):
    return list(g.vertices), dict(g.edge_items())


def _task(args):
    gid, gd, hd, suites = args
    return check_graph(gid, Multigraph(*gd), Multigraph(*hd), suites)


@dataclass
class VerificationReport:
    suites: tuple
    minor: str
    records: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def failures(self) -> list:
        return [(r["id"], s) for r in self.records for s, b in r["bounds"].items() if not b["pass"]]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        out = {"graphs": len(self.records),
               "skipped": sum(1 for r in self.records if "skipped" in r),
               "failures": len(self.failures)}
        for s in self.suites:
            out[s] = {"checked": sum(1 for r in self.records if s in r["bounds"]),
                      "passed": sum(1 for r in self.records if r["bounds"].get(s, {}).get("pass"))}
        return out

    def to_json(self, timings=True) -> dict:
        out = {"report_version": REPORT_VERSION, "suites": list(self.suites), "minor": self.minor,
               "records": self.records, "summary": self.summary()}
        if timings:
            out["timings"] = self.timings
        return out


def verify(graphs, h, suites=SUITES, jobs=1) -> VerificationReport:
    """Run ``suites`` on every ``(id, graph)``; parallel runs merge in input order."""
    suites = tuple(s for s in SUITES if s in suites)
    rep = VerificationReport(suites, "K1" if h.order == 1 else encode_graph6(h))
    if jobs > 1 and len(graphs) > 1:
        tasks = [(gid, _plain(g), _plain(h), suites) for gid, g in graphs]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_task, tasks, chunksize=8))
    else:
        results = [check_graph(gid, g, h, suites) for gid, g in graphs]
    for rec, times in results:
        rep.records.append(rec)
        rep.timings[rec["id"]] = times
    return rep
