"""Exact small Ramsey numbers and a table of known Ramsey bounds.

R(s, t) is the least n such that every red/blue coloring of the edges of K_n
contains a red K_s or a blue K_t. This module computes small values exactly by
vertex-by-vertex backtracking with lexicographic symmetry breaking, propagates
classical recurrence bounds through a table of known intervals, and derives
lower bounds from explicit witness graphs.
"""

from __future__ import annotations

import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .graphs import Graph, from_edges, to_graph6
from .invariants import BudgetExceeded, _exists_clique, clique_number

__all__ = [
    "RamseyBoundRecord",
    "BoundsTable",
    "RamseyResult",
    "erdos_szekeres_bound",
    "trivial_lower_bound",
    "ramsey_exact_small",
    "lower_bound_from_graph",
    "recurrence_closure",
    "load_bounds_table",
    "save_bounds_table",
    "packaged_bounds_table",
    "query_bound",
]


def erdos_szekeres_bound(s: int, t: int) -> int:
    """The classical upper bound C(s+t-2, s-1) on R(s, t), exact integer."""
    if s < 1 or t < 1:
        raise ValueError(f"need s, t >= 1, got ({s}, {t})")
    return math.comb(s + t - 2, s - 1)


def trivial_lower_bound(s: int, t: int) -> int:
    """(s-1)(t-1) + 1 <= R(s, t), witnessed by a complete (s-1)-partite red graph."""
    if s < 1 or t < 1:
        raise ValueError(f"need s, t >= 1, got ({s}, {t})")
    if s == 1 or t == 1:
        return 1
    return (s - 1) * (t - 1) + 1


@dataclass(frozen=True)
class RamseyBoundRecord:
    """Best known bounds lower <= R(s, t) <= upper for one canonical pair."""

    s: int
    t: int
    lower: int
    upper: int
    source: str = ""

    def __post_init__(self) -> None:
        if self.s < 1 or self.t < 1:
            raise ValueError(f"need s, t >= 1, got ({self.s}, {self.t})")
        if self.s > self.t:
            raise ValueError(f"record must be canonical (s <= t), got ({self.s}, {self.t})")
        if not 1 <= self.lower <= self.upper:
            raise ValueError(
                f"need 1 <= lower <= upper for R({self.s},{self.t}), "
                f"got [{self.lower}, {self.upper}]"
            )
        if self.s == 1 and not (self.lower == self.upper == 1):
            raise ValueError(f"R(1,{self.t}) = 1 exactly, got [{self.lower}, {self.upper}]")
        if self.s == 2 and not (self.lower == self.upper == self.t):
            raise ValueError(f"R(2,{self.t}) = {self.t} exactly, got [{self.lower}, {self.upper}]")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json_obj(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "lower": self.lower,
            "upper": self.upper,
            "source": self.source,
        }

    @classmethod
    def from_json_obj(cls, obj: dict, where: str = "record") -> "RamseyBoundRecord":
        if not isinstance(obj, dict):
            raise ValueError(f"{where}: expected an object, got {type(obj).__name__}")
        try:
            s, t = int(obj["s"]), int(obj["t"])
            lower, upper = int(obj["lower"]), int(obj["upper"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{where}: missing or non-integer field ({exc})") from None
        source = str(obj.get("source", ""))
        if s > t:
            s, t = t, s
        try:
            return cls(s, t, lower, upper, source)
        except ValueError as exc:
            raise ValueError(f"{where}: {exc}") from None


class BoundsTable:
    """Map from canonical (s, t) pairs to their best known bound records.

    Queries are symmetric in (s, t). Adding a second record for an existing
    pair tightens the stored interval; contradictory records are rejected.
    """

    def __init__(self, records: Iterable[RamseyBoundRecord] = ()) -> None:
        self._by_pair: dict[tuple[int, int], RamseyBoundRecord] = {}
        for rec in records:
            self.add(rec)

    def __len__(self) -> int:
        return len(self._by_pair)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        s, t = pair
        return (min(s, t), max(s, t)) in self._by_pair

    def add(self, rec: RamseyBoundRecord) -> None:
        key = (rec.s, rec.t)
        old = self._by_pair.get(key)
        if old is not None:
            lower = max(old.lower, rec.lower)
            upper = min(old.upper, rec.upper)
            if lower > upper:
                raise ValueError(
                    f"contradictory records for R{key}: [{old.lower}, {old.upper}] "
                    f"vs [{rec.lower}, {rec.upper}]"
                )
            source = old.source if rec.source in ("", old.source) else f"{old.source} + {rec.source}"
            rec = RamseyBoundRecord(rec.s, rec.t, lower, upper, source)
        self._by_pair[key] = rec

    def get(self, s: int, t: int) -> Optional[RamseyBoundRecord]:
        return self._by_pair.get((min(s, t), max(s, t)))

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self._by_pair)

    def records(self) -> list[RamseyBoundRecord]:
        return [self._by_pair[p] for p in self.pairs()]

    def to_json_obj(self) -> list[dict]:
        return [rec.to_json_obj() for rec in self.records()]

    def sha256(self) -> str:
        """Content hash of the canonical serialization, for report provenance."""
        payload = json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("ascii")).hexdigest()


def query_bound(table: BoundsTable, s: int, t: int) -> Optional[RamseyBoundRecord]:
    """The stored record for (s, t) in either order, or None when absent."""
    if s < 1 or t < 1:
        raise ValueError(f"need s, t >= 1, got ({s}, {t})")
    return table.get(s, t)


def load_bounds_table(path) -> BoundsTable:
    """Load a JSON array of bound records, validating every entry."""
    with open(path, "r", encoding="ascii") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON array of records")
    table = BoundsTable()
    for i, obj in enumerate(data):
        table.add(RamseyBoundRecord.from_json_obj(obj, where=f"{path}: record {i + 1}"))
    return table


def save_bounds_table(table: BoundsTable, path) -> None:
    """Write the table as a JSON array, one record per line, sorted by (s, t)."""
    lines = ",\n".join("  " + json.dumps(r.to_json_obj(), sort_keys=True) for r in table.records())
    with open(path, "w", encoding="ascii") as fh:
        fh.write("[\n" + lines + "\n]\n")


def packaged_bounds_table() -> BoundsTable:
    """The bounds table shipped with the package (1 <= s <= t <= 10)."""
    import importlib.resources as resources

    source = resources.files(__package__).joinpath("data/ramsey_bounds.json")
    with resources.as_file(source) as path:
        return load_bounds_table(path)


def recurrence_closure(table: BoundsTable) -> BoundsTable:
    """Propagate R(s,t) <= R(s-1,t) + R(s,t-1) (minus 1 when both are even).

    Fills the bounding box 1 <= s <= t <= max(t) with base rows R(1,t) = 1 and
    R(2,t) = t, the trivial lower bound (s-1)(t-1)+1 for created records, and
    upper bounds tightened by the recurrence. Existing lower bounds are never
    changed, existing uppers never loosened; the operation is idempotent.
    """
    if len(table) == 0:
        return BoundsTable()
    t_max = max(t for _, t in table.pairs())
    out: dict[tuple[int, int], RamseyBoundRecord] = {}
    for s in range(1, t_max + 1):
        for t in range(s, t_max + 1):
            existing = table.get(s, t)
            if s <= 2:
                value = 1 if s == 1 else t
                if existing is not None:
                    # Record invariants already force exactness on base rows.
                    out[(s, t)] = existing
                else:
                    out[(s, t)] = RamseyBoundRecord(s, t, value, value, "derived: base row")
                continue
            a = out[(s - 1, t)].upper
            b = out[(min(s, t - 1), max(s, t - 1))].upper
            cand = a + b - (1 if a % 2 == 0 and b % 2 == 0 else 0)
            if existing is None:
                lower = trivial_lower_bound(s, t)
                if lower > cand:
                    raise ValueError(
                        f"inconsistent table: trivial lower {lower} exceeds "
                        f"recurrence upper {cand} for R({s},{t})"
                    )
                out[(s, t)] = RamseyBoundRecord(
                    s, t, lower, cand, "derived: trivial lower, recurrence upper"
                )
            elif cand < existing.upper:
                out[(s, t)] = replace(
                    existing,
                    upper=cand,
                    source=(existing.source + "; upper tightened by recurrence").lstrip("; "),
                )
            else:
                out[(s, t)] = existing
    return BoundsTable(out.values())


def lower_bound_from_graph(g: Graph, source: str = "") -> RamseyBoundRecord:
    """The bound R(omega+1, alpha+1) >= n+1 witnessed by an n-vertex graph.

    The graph itself (red = edges, blue = non-edges) avoids red K_{omega+1}
    and blue K_{alpha+1}. The record's upper bound is the binomial bound.
    """
    from .invariants import independence_number

    omega = clique_number(g).value
    alpha = independence_number(g).value
    s, t = sorted((omega + 1, alpha + 1))
    if not source:
        source = f"lower: witness graph on {g.n} vertices; upper: binomial bound"
    return RamseyBoundRecord(s, t, g.n + 1, erdos_szekeres_bound(s, t), source)


# -- exact search ------------------------------------------------------------


@dataclass(frozen=True)
class RamseyResult:
    """Outcome of an exact search: a certified interval, exact when it closes.

    ``lower`` is always certified by a verified witness coloring on lower - 1
    vertices (``witness_red``; the blue graph is its complement). ``upper`` is
    certified by exhausting all colorings on ``upper`` vertices, and is None
    when the search stopped (budget or size cap) before any exhaustion.
    """

    s: int
    t: int
    lower: int
    upper: Optional[int]
    nodes: int
    witness_red: Optional[Graph]
    budget_exhausted: bool = False

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.exact else None

    @property
    def witness_blue(self) -> Optional[Graph]:
        return None if self.witness_red is None else self.witness_red.complement()

    def witness_graph6(self) -> Optional[tuple[str, str]]:
        """The witness coloring as (red graph6, blue graph6), or None."""
        if self.witness_red is None:
            return None
        return to_graph6(self.witness_red), to_graph6(self.witness_blue)


class _ColoringSearch:
    """DFS for a red/blue coloring of K_n with no red K_s and no blue K_t.

    Vertices are added one at a time; each new vertex's color vector toward
    earlier vertices is built bit by bit with incremental clique pruning.
    After each completed row, transposition symmetry breaking rejects any
    partial coloring that a swap of two labels would make lexicographically
    smaller (blue < red, columns in vertex order), so only one labeled
    representative per tracked symmetry survives. The lexicographically
    smallest valid coloring is never rejected, which keeps both existence and
    nonexistence conclusions sound.
    """

    def __init__(self, s: int, t: int, n: int, budget: Optional[int] = None) -> None:
        self.s, self.t, self.n = s, t, n
        self.red = [0] * n
        self.blue = [0] * n
        self.budget = budget
        self.nodes = 0
        self.witness: Optional[list[int]] = None
        self.stop_depth: Optional[int] = None
        self.snapshots: list[tuple[list[int], list[int], list[tuple[int, int]]]] = []

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded

    def run(self) -> bool:
        """Search from the root; True iff a full valid coloring was found."""
        return self._extend(0, [])

    def run_from(self, red: list[int], blue: list[int], pending: list[tuple[int, int]],
                 depth: int) -> bool:
        """Continue a search from a snapshot whose first ``depth`` rows are decided."""
        self.red = list(red)
        self.blue = list(blue)
        return self._extend(depth, list(pending))

    def _extend(self, v: int, pending: list[tuple[int, int]]) -> bool:
        if v == self.n:
            self.witness = list(self.red)
            return True
        if self.stop_depth is not None and v == self.stop_depth:
            self.snapshots.append((list(self.red), list(self.blue), list(pending)))
            return False
        return self._row(v, 0, 0, 0, pending)

    def _row(self, v: int, u: int, rmask: int, bmask: int,
             pending: list[tuple[int, int]]) -> bool:
        self._tick()
        if u == v:
            return self._complete_row(v, rmask, bmask, pending)
        # Blue first: blue bits sort lexicographically below red ones.
        if not _exists_clique(self.blue, bmask & self.blue[u], self.t - 2):
            if self._row(v, u + 1, rmask, bmask | 1 << u, pending):
                return True
        if self.s == self.t and v == 1:
            # With symmetric roles the color swap is a symmetry; fixing the
            # first edge blue halves the tree without losing existence.
            return False
        if not _exists_clique(self.red, rmask & self.red[u], self.s - 2):
            if self._row(v, u + 1, rmask | 1 << u, bmask, pending):
                return True
        return False

    def _complete_row(self, v: int, rmask: int, bmask: int,
                      pending: list[tuple[int, int]]) -> bool:
        red, blue = self.red, self.blue
        # Ties among earlier label swaps are decided by the new column only at
        # rows i and j, so each carried pair costs O(1) here.
        new_pending = []
        for i, j in pending:
            ci = rmask >> i & 1
            cj = rmask >> j & 1
            if ci == cj:
                new_pending.append((i, j))
            elif cj < ci:
                return False
        red[v] = rmask
        blue[v] = bmask
        for x in range(v):
            bit = 1 << v
            if rmask >> x & 1:
                red[x] |= bit
            else:
                blue[x] |= bit
        try:
            for i in range(v):
                cmp = self._compare_swap(i, v)
                if cmp < 0:
                    return False
                if cmp == 0:
                    new_pending.append((i, v))
            return self._extend(v + 1, new_pending)
        finally:
            red[v] = 0
            blue[v] = 0
            mask = ~(1 << v)
            for x in range(v):
                red[x] &= mask
                blue[x] &= mask

    def _compare_swap(self, i: int, v: int) -> int:
        """Compare the coloring against its image under swapping labels i and v.

        Returns -1 if the swapped image is lexicographically smaller (prune),
        1 if larger (the pair is settled for good), 0 on a tie over all
        decided positions (columns 1..v in vertex order, rows ascending).
        """
        red = self.red
        for w in range(1, v + 1):
            touches = w == i or w == v
            for x in range(w):
                if not (touches or x == i):
                    continue
                a = red[w] >> x & 1
                px = v if x == i else x
                pw = i if w == v else (v if w == i else w)
                if px > pw:
                    px, pw = pw, px
                b = red[pw] >> px & 1
                if a != b:
                    return -1 if b < a else 1
        return 0


def _multipartite_witness(s: int, t: int) -> Graph:
    """Complete (s-1)-partite red graph with parts of size t-1: the classical
    witness that R(s, t) > (s-1)(t-1)."""
    n = (s - 1) * (t - 1)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if i // (t - 1) != j // (t - 1):
                edges.append((i, j))
    return from_edges(n, edges)


def _verify_witness(red: Graph, s: int, t: int) -> None:
    if clique_number(red).value >= s:
        raise RuntimeError(f"witness verification failed: red clique of size {s} present")
    if clique_number(red.complement()).value >= t:
        raise RuntimeError(f"witness verification failed: blue clique of size {t} present")


_PARTITION_DEPTH = 4


def _search_size(s: int, t: int, n: int, budget: Optional[int],
                 workers: int) -> tuple[Optional[list[int]], int, bool]:
    """Decide whether a valid coloring of K_n exists.

    Returns (witness red rows or None, nodes used, budget_exhausted). The
    work splits into independent subtree partitions taken at a fixed depth;
    the partition list, the per-partition budgets and the merge order are all
    fixed before any partition runs, so the result — including the node
    count — is identical for every worker count.
    """
    if n <= _PARTITION_DEPTH:
        search = _ColoringSearch(s, t, n, budget)
        try:
            found = search.run()
        except BudgetExceeded:
            return None, search.nodes, True
        return (search.witness if found else None), search.nodes, False

    scout = _ColoringSearch(s, t, n, budget)
    scout.stop_depth = _PARTITION_DEPTH
    try:
        scout.run()
    except BudgetExceeded:
        return None, scout.nodes, True
    parts = scout.snapshots
    if not parts:
        return None, scout.nodes, False
    shares: list[Optional[int]] = [None] * len(parts)
    if budget is not None:
        base, extra = divmod(budget - scout.nodes, len(parts))
        shares = [base + (1 if i < extra else 0) for i in range(len(parts))]

    def run_part(args):
        (red, blue, pending), share = args
        sub = _ColoringSearch(s, t, n, share)
        try:
            found = sub.run_from(red, blue, pending, _PARTITION_DEPTH)
        except BudgetExceeded:
            return None, sub.nodes, True
        return (sub.witness if found else None), sub.nodes, False

    if workers == 1:
        # Sequential scan may stop at the first witness; the parallel path
        # reproduces the same answer and node count by merging in order.
        outcomes = []
        for item in zip(parts, shares):
            outcome = run_part(item)
            outcomes.append(outcome)
            if outcome[0] is not None:
                break
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_part, zip(parts, shares)))

    nodes = scout.nodes
    exhausted = False
    for witness, used, over in outcomes:
        nodes += used
        if witness is not None:
            return witness, nodes, False
        exhausted = exhausted or over
    return None, nodes, exhausted


def ramsey_exact_small(s: int, t: int, n_max: int = 64,
                       node_budget: Optional[int] = None,
                       workers: int = 1) -> RamseyResult:
    """Compute R(s, t) exactly by backtracking search, or a certified interval.

    Starting from the verified multipartite witness on (s-1)(t-1) vertices,
    the search decides one size at a time whether a valid coloring exists.
    The first size with none is the exact value. If the node budget runs out
    or the size cap n_max is passed first, the result is the interval
    certified so far (upper bound None). Budgets count search nodes, so equal
    inputs give equal results on any machine and any worker count.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if not 2 <= s <= t:
        raise ValueError(f"need 2 <= s <= t, got ({s}, {t})")
    if n_max > 64:
        raise ValueError(f"n_max must be <= 64, got {n_max}")

    witness = _multipartite_witness(s, t)
    _verify_witness(witness, s, t)
    lower = witness.n + 1
    nodes = 0
    while lower <= n_max:
        share = None if node_budget is None else node_budget - nodes
        if share is not None and share <= 0:
            return RamseyResult(s, t, lower, None, nodes, witness, budget_exhausted=True)
        rows, used, over = _search_size(s, t, lower, share, workers)
        nodes += used
        if over:
            return RamseyResult(s, t, lower, None, nodes, witness, budget_exhausted=True)
        if rows is None:
            _verify_witness(witness, s, t)
            return RamseyResult(s, t, lower, lower, nodes, witness)
        witness = Graph(lower, tuple(rows))
        _verify_witness(witness, s, t)
        lower += 1
    return RamseyResult(s, t, lower, None, nodes, witness)
