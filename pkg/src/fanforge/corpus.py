"""Small-graph libraries: every 3-connected simple graph up to seven vertices,
named families, and random minor chains."""
from __future__ import annotations

import random
from itertools import combinations

from fanforge.graph import (
    Multigraph,
    contract_edge,
    delete_edge,
    is_3_connected,
    make_complete,
    make_complete_bipartite,
    make_hypercube,
    make_prism,
    make_wheel,
)
from fanforge.iso import canonical_key, canonical_labelling

MAX_BUILTIN_ORDER = 7


def _relabel(g: Multigraph) -> Multigraph:
    order = canonical_labelling(g)
    pos = {v: i for i, v in enumerate(order)}
    pairs = sorted(tuple(sorted((pos[a], pos[b]))) for a, b in g.pairs())
    return Multigraph.from_pairs(pairs, vertices=range(g.order))


def all_graphs(n: int):
    """Every simple graph on ``n`` vertices up to isomorphism, by edge count.

    Orderly growth: each level is the canonical closure of the previous one
    under adding one edge.
    """
    level = {canonical_key(Multigraph.from_pairs([], range(n))): Multigraph.from_pairs([], range(n))}
    slots = list(combinations(range(n), 2))
    while level:
        yield from (level[k] for k in sorted(level))
        nxt = {}
        for g in level.values():
            have = set(g.pairs())
            for p in slots:
                if p in have:
                    continue
                h = Multigraph.from_pairs(sorted(have | {p}), range(n))
                k = canonical_key(h)
                if k not in nxt:
                    nxt[k] = h
        level = nxt


def three_connected_graphs(n: int, allow_large=False):
    """3-connected simple graphs on exactly ``n`` vertices (``n >= 4``), canonically labelled."""
    if n > MAX_BUILTIN_ORDER and not allow_large:
        raise ValueError(f"built-in enumeration stops at {MAX_BUILTIN_ORDER} vertices")
    out = []
    for g in all_graphs(n):
        if g.size < (3 * n + 1) // 2:
            continue
        if all(g.degree(v) >= 3 for v in g.vertices) and is_3_connected(g):
            out.append(_relabel(g))
    return out


def corpus(max_n: int = MAX_BUILTIN_ORDER, min_n: int = 4) -> list:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend(three_connected_graphs(n))
    return out


def named(spec: str) -> list:
    """``[(name, graph)]`` for a named-family spec.

    Accepted: ``wheels:a..b``, ``wheel:n``, ``prism``, ``q3``, ``k4``, ``k33``,
    ``k:n``, ``kbip:a,b``, ``cube:d``; several separated by ``+``.
    """
    out = []
    for part in spec.split("+"):
        part = part.strip().lower()
        if part.startswith("wheels:"):
            lo, hi = part.split(":", 1)[1].split("..")
            out += [(f"W{n}", make_wheel(n)) for n in range(int(lo), int(hi) + 1)]
        elif part.startswith("wheel:"):
            n = int(part.split(":", 1)[1])
            out.append((f"W{n}", make_wheel(n)))
        elif part == "prism":
            out.append(("prism", make_prism()))
        elif part == "q3":
            out.append(("Q3", make_hypercube(3)))
        elif part.startswith("cube:"):
            d = int(part.split(":", 1)[1])
            out.append((f"Q{d}", make_hypercube(d)))
        elif part == "k4":
            out.append(("K4", make_complete(4)))
        elif part.startswith("k:"):
            n = int(part.split(":", 1)[1])
            out.append((f"K{n}", make_complete(n)))
        elif part == "k33":
            out.append(("K33", make_complete_bipartite(3, 3)))
        elif part.startswith("kbip:"):
            a, b = map(int, part.split(":", 1)[1].split(","))
            out.append((f"K{a},{b}", make_complete_bipartite(a, b)))
        else:
            raise ValueError(f"unknown graph family {part!r}")
    return out


def random_reduction(g: Multigraph, rng: random.Random, min_steps=1, stop=0.25):
    """Walk down from ``g`` by random contractions/deletions that stay simple and
    3-connected; returns ``(minor, steps)`` with at least one contraction, or
    ``None`` if no such step exists."""
    steps = []
    cur = g
    while True:
        moves = []
        for e in cur.edge_ids:
            c = contract_edge(cur, e)
            if c.is_simple() and is_3_connected(c):
                moves.append(("contract", e, c))
            d = delete_edge(cur, e)
            if is_3_connected(d):
                moves.append(("delete", e, d))
        if not moves:
            break
        if len(steps) >= min_steps and any(s[0] == "contract" for s in steps) and rng.random() < stop:
            break
        if not any(s[0] == "contract" for s in steps) and any(m[0] == "contract" for m in moves) \
                and rng.random() < 0.5:
            moves = [m for m in moves if m[0] == "contract"]
        op, e, cur = rng.choice(moves)
        steps.append((op, e))
    if not any(s[0] == "contract" for s in steps):
        return None
    return cur, steps
