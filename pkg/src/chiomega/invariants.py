"""Exact graph invariants: clique number, independence number, chromatic number.

The clique solver is a branch-and-bound over vertex bitmasks with a greedy
coloring upper bound; the chromatic solver is a DSATUR-style branch-and-bound
seeded with the clique lower bound. Both are exact and deterministic: all
tie-breaks are fixed, and witnesses are the lexicographically smallest ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphs import Graph, bits


class BudgetExceeded(Exception):
    """Raised internally when a solver runs out of search nodes."""


@dataclass(frozen=True)
class ColoringCertificate:
    """A proper-coloring witness: one 0-based color index per vertex."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        if self.num_colors != len(set(self.colors)):
            raise ValueError("num_colors does not match the distinct colors present")


@dataclass(frozen=True)
class ExactInvariantResult:
    """An invariant value plus the witness that certifies it.

    ``witness`` is a vertex bitmask for clique/independent-set invariants and a
    ColoringCertificate for the chromatic number. ``exact`` is False only when
    a node budget stopped the search before optimality was proven.
    """

    value: int
    witness: Union[int, ColoringCertificate]
    exact: bool


@dataclass(frozen=True)
class GreedyColoringStats:
    """Per-run record of the extract-maximum-independent-sets coloring."""

    m0: int
    extracted_sizes: tuple[int, ...]
    r_observed: int
    leftover: int
    colors_used: int

    def __post_init__(self) -> None:
        if any(s < 1 for s in self.extracted_sizes):
            raise ValueError("every extracted set must be nonempty")
        if self.leftover >= self.m0:
            raise ValueError("leftover must be below the cutoff")
        if self.colors_used != len(self.extracted_sizes) + self.leftover:
            raise ValueError("colors_used must equal extractions plus leftover")


# -- maximum clique ---------------------------------------------------------


def _color_sort(adj: tuple[int, ...], cand: int) -> tuple[list[int], list[int]]:
    """Greedy-color the candidate set; returns vertices with ascending color bounds."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            avail &= ~adj[v]
            avail ^= b
            rest ^= b
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(adj: tuple[int, ...], cand: int) -> tuple[int, int]:
    """Size and one witness mask of a maximum clique inside ``cand``."""
    best = 0
    best_mask = 0

    def expand(cand: int, size: int, mask: int) -> None:
        nonlocal best, best_mask
        order, bounds = _color_sort(adj, cand)
        remaining = cand
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            remaining ^= 1 << v
            sub = remaining & adj[v]
            if sub:
                expand(sub, size + 1, mask | 1 << v)
            elif size + 1 > best:
                best = size + 1
                best_mask = mask | 1 << v

    if cand:
        expand(cand, 0, 0)
    return best, best_mask


def _exists_clique(adj: tuple[int, ...], cand: int, k: int) -> bool:
    """Decision version: does ``cand`` contain a clique on k vertices?"""
    if k <= 0:
        return True
    if cand.bit_count() < k:
        return False
    order, bounds = _color_sort(adj, cand)
    if bounds[-1] < k:
        return False
    remaining = cand
    for i in range(len(order) - 1, -1, -1):
        if bounds[i] < k:
            return False
        v = order[i]
        remaining ^= 1 << v
        if _exists_clique(adj, remaining & adj[v], k - 1):
            return True
    return False


def _lex_smallest_clique(adj: tuple[int, ...], cand: int, size: int) -> int:
    """Lexicographically smallest clique of the given size (as a sorted vertex set)."""
    mask = 0
    for need in range(size, 0, -1):
        for v in bits(cand):
            above = ~((1 << (v + 1)) - 1)
            sub = cand & adj[v] & above
            if need == 1 or _exists_clique(adj, sub, need - 1):
                mask |= 1 << v
                cand = sub
                break
        else:
            raise AssertionError("clique witness reconstruction failed")
    return mask


def clique_number(g: Graph) -> ExactInvariantResult:
    """Exact clique number with the lexicographically smallest maximum clique."""
    size, _ = _max_clique(g.adj, g.full_mask())
    witness = _lex_smallest_clique(g.adj, g.full_mask(), size)
    return ExactInvariantResult(value=size, witness=witness, exact=True)


def independence_number(g: Graph) -> ExactInvariantResult:
    """Exact independence number: the clique number of the complement."""
    comp = g.complement()
    size, _ = _max_clique(comp.adj, comp.full_mask())
    witness = _lex_smallest_clique(comp.adj, comp.full_mask(), size)
    return ExactInvariantResult(value=size, witness=witness, exact=True)


# -- chromatic number -------------------------------------------------------


def _dsatur_greedy(adj: tuple[int, ...], n: int) -> list[int]:
    """DSATUR heuristic coloring; colors are 1-based, 0 means uncolored."""
    colors = [0] * n
    neighbor_colors = [0] * n
    for _ in range(n):
        pick = -1
        pick_key = (-1, -1)
        for v in range(n):
            if colors[v]:
                continue
            key = (neighbor_colors[v].bit_count(), adj[v].bit_count())
            if key > pick_key:
                pick_key = key
                pick = v
        used = neighbor_colors[pick]
        c = 1
        while used >> c & 1:
            c += 1
        colors[pick] = c
        for u in bits(adj[pick]):
            neighbor_colors[u] |= 1 << c
    return colors


def _normalize_colors(colors: list[int]) -> ColoringCertificate:
    """Relabel colors to 0-based indices in order of first appearance."""
    remap: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in remap:
            remap[c] = len(remap)
        out.append(remap[c])
    return ColoringCertificate(colors=tuple(out), num_colors=len(remap))


def chromatic_number(g: Graph, node_budget: Optional[int] = None) -> ExactInvariantResult:
    """Exact chromatic number via DSATUR branch-and-bound.

    Exactness comes either from the clique lower bound matching the upper
    bound or from exhausting the search below it. With a ``node_budget`` the
    search may stop early, returning the best coloring found with
    ``exact=False``.
    """
    n = g.n
    adj = g.adj
    full = g.full_mask()
    omega, clique_mask = _max_clique(adj, g.full_mask())
    alpha, _ = _max_clique(tuple(~a & full & ~(1 << v) for v, a in enumerate(adj)), full)
    # Two standard lower bounds: the clique bound and the independence-number
    # bound ceil(n / alpha); the search may stop as soon as either is met.
    lower = max(omega, -(-n // alpha))

    greedy = _dsatur_greedy(adj, n)
    best_colors = list(greedy)
    best_k = max(greedy)

    if best_k == lower:
        return ExactInvariantResult(value=best_k, witness=_normalize_colors(best_colors), exact=True)

    # Pre-color a maximum clique with distinct colors; any optimal coloring
    # can be renamed to agree with this, so no solutions are lost.
    colors = [0] * n
    neighbor_colors = [0] * n
    used = 0
    for v in bits(clique_mask):
        used += 1
        colors[v] = used
        for u in bits(adj[v]):
            neighbor_colors[u] |= 1 << used

    nodes = 0
    exact = True

    def descend(colored: int, max_used: int) -> None:
        nonlocal best_k, best_colors, nodes
        if best_k == lower:
            return
        if node_budget is not None:
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded
        if colored == n:
            best_k = max_used
            best_colors = list(colors)
            return
        pick = -1
        pick_key = (-1, -1, 1)
        for v in range(n):
            if colors[v]:
                continue
            key = (neighbor_colors[v].bit_count(), adj[v].bit_count(), -v)
            if key > pick_key:
                pick_key = key
                pick = v
        limit = min(max_used + 1, best_k - 1)
        forbidden = neighbor_colors[pick]
        for c in range(1, limit + 1):
            if c >= best_k:
                break
            if forbidden >> c & 1:
                continue
            colors[pick] = c
            touched = []
            for u in bits(adj[pick]):
                if not neighbor_colors[u] >> c & 1:
                    neighbor_colors[u] |= 1 << c
                    touched.append(u)
            descend(colored + 1, max(max_used, c))
            colors[pick] = 0
            for u in touched:
                neighbor_colors[u] ^= 1 << c
            if best_k == lower:
                return

    try:
        descend(clique_mask.bit_count(), used)
    except BudgetExceeded:
        exact = False
    return ExactInvariantResult(value=best_k, witness=_normalize_colors(best_colors), exact=exact)


def is_proper_coloring(g: Graph, cert: ColoringCertificate) -> bool:
    """True iff no edge of ``g`` is monochromatic under the certificate."""
    if len(cert.colors) != g.n:
        raise ValueError(f"certificate colors {len(cert.colors)} vertices, graph has {g.n}")
    for i, j in g.edges():
        if cert.colors[i] == cert.colors[j]:
            return False
    return True


# -- greedy maximum-independent-set coloring --------------------------------


def greedy_erdos_coloring(g: Graph, m0: int) -> tuple[ColoringCertificate, GreedyColoringStats]:
    """Color by extracting maximum independent sets until under ``m0`` vertices remain.

    Each extraction is one color class (lex-smallest maximum independent set of
    the remaining induced subgraph); every leftover vertex gets a fresh color.
    The number of colors is at most ceil(n / r) + m0 where r is the smallest
    extracted size.
    """
    if not 1 <= m0 <= g.n:
        raise ValueError(f"m0 must be in 1..{g.n}, got {m0}")
    comp = g.complement()
    remaining = g.full_mask()
    colors = [0] * g.n
    color_id = 0
    extracted: list[int] = []
    while remaining.bit_count() >= m0:
        size, _ = _max_clique(comp.adj, remaining)
        mask = _lex_smallest_clique(comp.adj, remaining, size)
        for v in bits(mask):
            colors[v] = color_id
        extracted.append(size)
        remaining &= ~mask
        color_id += 1
    leftover = remaining.bit_count()
    for v in bits(remaining):
        colors[v] = color_id
        color_id += 1
    stats = GreedyColoringStats(
        m0=m0,
        extracted_sizes=tuple(extracted),
        r_observed=min(extracted),
        leftover=leftover,
        colors_used=color_id,
    )
    cert = ColoringCertificate(colors=tuple(colors), num_colors=color_id)
    return cert, stats
