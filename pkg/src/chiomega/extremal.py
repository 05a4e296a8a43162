"""Extremal chromatic-to-clique ratios: exact small maxima and witness search.

The central quantity is the largest ratio chi(G)/omega(G) over all graphs G on
n vertices. For n <= 8 it is computed exactly by isomorph-free exhaustive
enumeration; for larger n, seeded constructions and local search produce
certified lower bounds (every reported ratio is backed by a concrete witness
graph whose invariants are recomputed exactly).
"""

from __future__ import annotations

import functools
import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional

from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_graph6,
    mycielski,
    paley_graph,
    random_graph,
    to_graph6,
)
from .invariants import BudgetExceeded, chromatic_number, clique_number, independence_number

__all__ = [
    "Ratio",
    "SearchMeta",
    "RatioRecord",
    "RatioWitnessReport",
    "TableVerdict",
    "canonical_graphs",
    "max_ratio_exact",
    "max_ratio_search",
    "normalized_ratio_lower",
    "verify_ratio_table",
    "save_ratio_table",
    "load_ratio_table",
    "ratio_csv",
    "export_ratio_csv",
    "packaged_ratio_table",
]


@functools.total_ordering
class Ratio:
    """An exact chi/omega ratio kept as the unreduced integer pair.

    Comparisons cross-multiply, so no floating point is involved; 4/2 and 2/1
    compare equal while preserving the witness's actual invariant values.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int) -> None:
        if den < 1 or num < den:
            raise ValueError(f"need num >= den >= 1, got {num}/{den}")
        self.num = num
        self.den = den

    def __repr__(self) -> str:
        return f"Ratio({self.num}, {self.den})"

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ratio):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __lt__(self, other: "Ratio") -> bool:
        return self.num * other.den < other.num * self.den

    def __hash__(self) -> int:
        return hash(Fraction(self.num, self.den))

    def __float__(self) -> float:
        return self.num / self.den

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


@dataclass(frozen=True)
class SearchMeta:
    """How a record was produced: nodes/evaluations spent, strategy, seed."""

    nodes: int = 0
    strategy: str = ""
    seed: int = 0


@dataclass(frozen=True)
class RatioRecord:
    """Best chi/omega ratio found for one n, with its witness graph."""

    n: int
    value: Ratio
    witness: Graph
    exhaustive: bool
    meta: SearchMeta = field(default_factory=SearchMeta)

    def __post_init__(self) -> None:
        if self.witness.n != self.n:
            raise ValueError(f"witness has {self.witness.n} vertices, record says {self.n}")

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "chi": self.value.num,
            "omega": self.value.den,
            "witness_graph6": to_graph6(self.witness),
            "exhaustive": self.exhaustive,
            "seed": self.meta.seed,
        }

    @classmethod
    def from_json_obj(cls, obj: dict, where: str = "record") -> "RatioRecord":
        try:
            return cls(
                n=int(obj["n"]),
                value=Ratio(int(obj["chi"]), int(obj["omega"])),
                witness=from_graph6(obj["witness_graph6"]),
                exhaustive=bool(obj["exhaustive"]),
                meta=SearchMeta(seed=int(obj.get("seed", 0))),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{where}: {exc}") from None


@dataclass(frozen=True)
class RatioWitnessReport:
    """Exact invariants of one graph and the (log2 n)^2/(alpha*omega) bound."""

    n: int
    graph: Graph
    chi: int
    omega: int
    alpha: int
    g_lower: float


# -- isomorph-free enumeration ----------------------------------------------
#
# A labeled graph is stored as its column-major upper-triangle bitstring: the
# bits (u, v) for u < v, grouped by the higher vertex v, rows ascending. A
# labeling is canonical when no permutation of the vertices yields a smaller
# string. Deleting the last vertex of a canonically labeled graph removes a
# suffix of the string and leaves a canonically labeled graph (any better
# relabeling of the prefix would extend to a better relabeling of the whole),
# so canonical graphs form a tree under "add one vertex": enumerating each
# size's canonical extensions visits every isomorphism class exactly once,
# with no stored seen-set.


def _column(adj, x: int, order: list[int], length: int) -> int:
    """Column bits of vertex ``x`` against ``order[:length]``, row 0 most significant."""
    col = 0
    row = adj[x]
    for u in range(length):
        col = col << 1 | (row >> order[u] & 1)
    return col


def _is_canonical(adj: tuple[int, ...]) -> bool:
    """Whether the labeled graph's bitstring is minimal over all relabelings."""
    n = len(adj)
    own = [0] * n
    ident = list(range(n))
    for v in range(1, n):
        own[v] = _column(adj, v, ident, v)
    order: list[int] = []
    used = [False] * n

    def place(v: int) -> bool:
        # True means some completion beats the identity labeling.
        if v == n:
            return False
        for x in range(n):
            if used[x]:
                continue
            if v:
                col = _column(adj, x, order, v)
                if col > own[v]:
                    continue
                if col < own[v]:
                    return True
            used[x] = True
            order.append(x)
            if place(v + 1):
                return True
            order.pop()
            used[x] = False
        return False

    return not place(0)


def _extend(adj: tuple[int, ...], mask: int) -> tuple[int, ...]:
    """Add one vertex adjacent to ``mask``."""
    k = len(adj)
    bit = 1 << k
    return tuple((row | bit if mask >> v & 1 else row) for v, row in enumerate(adj)) + (mask,)


def canonical_graphs(n: int) -> Iterator[Graph]:
    """All graphs on n vertices up to isomorphism, one canonical labeling each."""
    if not 1 <= n <= 64:
        raise ValueError(f"need 1 <= n <= 64, got {n}")

    def grow(adj: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(adj) == n:
            yield adj
            return
        for mask in range(1 << len(adj)):
            child = _extend(adj, mask)
            if _is_canonical(child):
                yield from grow(child)

    for adj in grow((0,)):
        yield Graph(n, adj)


def _prefer(cand: tuple[Ratio, Graph], best: Optional[tuple[Ratio, Graph]]) -> bool:
    """Deterministic maximum: larger ratio, then fewer edges, then graph6 order."""
    if best is None:
        return True
    r, g = cand
    br, bg = best
    if r != br:
        return r > br
    e, be = g.num_edges(), bg.num_edges()
    if e != be:
        return e < be
    return to_graph6(g) < to_graph6(bg)


class _EnumBest:
    """Fold the enumeration of one subtree down to its best ratio record."""

    def __init__(self, n: int, budget: Optional[int]) -> None:
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.best: Optional[tuple[Ratio, Graph]] = None

    def _score(self, adj: tuple[int, ...]) -> None:
        g = Graph(self.n, adj)
        omega = clique_number(g).value
        # chi <= n caps the ratio at n/omega; skip the chromatic solve when
        # even that cannot beat or tie the incumbent.
        if self.best is not None and self.n * self.best[0].den < self.best[0].num * omega:
            return
        chi = chromatic_number(g).value
        cand = (Ratio(chi, omega), g)
        if _prefer(cand, self.best):
            self.best = cand

    def run(self, root: tuple[int, ...]) -> None:
        if len(root) == self.n:
            self._score(root)
            return
        for mask in range(1 << len(root)):
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise BudgetExceeded
            child = _extend(root, mask)
            if _is_canonical(child):
                self.run(child)


_ROOT_SIZE = 4


def max_ratio_exact(n: int, node_budget: Optional[int] = None, workers: int = 1,
                    allow_nine: bool = False) -> RatioRecord:
    """The exact maximum of chi/omega over all n-vertex graphs, with witness.

    Enumerates isomorphism classes by canonical extension and keeps the best
    ratio under the deterministic tie-break (fewer edges, then graph6 order).
    Exhaustive mode is capped at n = 8; n = 9 (274668 classes) must be opted
    into explicitly, and larger n are refused outright — use
    ``max_ratio_search`` there. A budget (counted in extension tests) turns
    the result into a partial, non-exhaustive record.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 9 and not allow_nine:
        raise ValueError("n = 9 is exhaustive only with allow_nine=True (274668 classes)")
    if n > 9:
        raise ValueError(f"exhaustive mode is capped at n <= 9; use max_ratio_search for n = {n}")
    if workers < 1:
        raise ValueError("workers must be >= 1")

    # Partition the enumeration tree at a fixed small size; the subtree roots,
    # their order, and their budget shares never depend on the worker count.
    roots: list[tuple[int, ...]] = []
    nodes = 0
    if n <= _ROOT_SIZE:
        roots.append((0,))
    else:
        def seed_roots(adj: tuple[int, ...]) -> None:
            nonlocal nodes
            if len(adj) == _ROOT_SIZE:
                roots.append(adj)
                return
            for mask in range(1 << len(adj)):
                nodes += 1
                child = _extend(adj, mask)
                if _is_canonical(child):
                    seed_roots(child)

        seed_roots((0,))

    shares: list[Optional[int]] = [None] * len(roots)
    if node_budget is not None:
        remaining = max(0, node_budget - nodes)
        base, extra = divmod(remaining, len(roots))
        shares = [base + (1 if i < extra else 0) for i in range(len(roots))]

    def run_root(args):
        root, share = args
        fold = _EnumBest(n, share)
        try:
            fold.run(root)
        except BudgetExceeded:
            return fold.best, fold.nodes, False
        return fold.best, fold.nodes, True

    if workers == 1:
        outcomes = [run_root(item) for item in zip(roots, shares)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_root, zip(roots, shares)))

    best: Optional[tuple[Ratio, Graph]] = None
    complete = True
    for part_best, part_nodes, part_done in outcomes:
        nodes += part_nodes
        complete = complete and part_done
        if part_best is not None and _prefer(part_best, best):
            best = part_best
    if best is None:
        raise BudgetExceeded("budget too small to score any graph")
    value, witness = best
    meta = SearchMeta(nodes=nodes, strategy="exhaustive", seed=0)
    return RatioRecord(n=n, value=value, witness=witness, exhaustive=complete, meta=meta)


# -- lower-bound search ------------------------------------------------------


def _padded(g: Graph, n: int) -> Graph:
    """Lift a witness to n vertices; isolated vertices change neither chi nor omega."""
    return g.add_isolated(n - g.n)


def _construction_portfolio(n: int) -> list[tuple[str, Graph]]:
    """Named seed graphs on exactly n vertices, deterministic order."""
    out: list[tuple[str, Graph]] = [("complete", complete_graph(n))]
    if n >= 5:
        out.append(("cycle5", _padded(cycle_graph(5), n)))
    tower = complete_graph(2)
    level = 0
    while tower.n * 2 + 1 <= n:
        tower = mycielski(tower)
        level += 1
        out.append((f"mycielski^{level}(K2)", _padded(tower, n)))
    for q in (5, 13, 17, 29, 37, 41, 53, 61):
        if q <= n:
            out.append((f"paley{q}", _padded(paley_graph(q), n)))
    if n >= 10:
        out.append(("cycle5+cycle5", _padded(disjoint_union(cycle_graph(5), cycle_graph(5)), n)))
    return out


_CHI_BUDGET = 2_000_000


def _score_exact(g: Graph) -> Optional[Ratio]:
    """chi/omega with a certified chi, or None when the solver cannot close it."""
    chi = chromatic_number(g, node_budget=_CHI_BUDGET)
    if not chi.exact:
        return None
    return Ratio(chi.value, clique_number(g).value)


_ANNEAL_CHAINS = 4


def _anneal_chain(n: int, start: Graph, seed: int, evals: int,
                  record: Callable[[Ratio, Graph], None]) -> int:
    """One simulated-annealing chain over single-edge flips, exact scoring.

    Only certified ratios are recorded; uncertified candidates are rejected
    moves. Returns the number of evaluations performed.
    """
    rng = random.Random(seed)
    current = start
    current_score = _score_exact(current)
    if current_score is not None:
        record(current_score, current)
    temperature = 0.25
    used = 0
    while used < evals:
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        cand = current.with_edge_toggled(i, j)
        used += 1
        cand_score = _score_exact(cand)
        if cand_score is None:
            temperature *= 0.995
            continue
        record(cand_score, cand)
        accept = current_score is None or cand_score >= current_score
        if not accept:
            delta = float(current_score) - float(cand_score)
            accept = rng.random() < math.exp(-delta / max(temperature, 1e-9))
        if accept:
            current, current_score = cand, cand_score
        temperature *= 0.995
    return used


def max_ratio_search(n: int, strategy: str = "hybrid", seed: int = 0,
                     node_budget: Optional[int] = None, workers: int = 1) -> RatioRecord:
    """Best certified chi/omega lower bound found on n vertices.

    ``constructions`` scores a fixed portfolio (complete graph, padded 5-cycle,
    iterated Mycielski towers, Paley graphs, disjoint unions); ``anneal`` runs
    four seeded edge-flip chains from a random start; ``hybrid`` does both,
    annealing from the best construction. The budget counts candidate
    evaluations. Every evaluation uses exact invariants, so the result is
    always a true lower bound; determinism depends only on (strategy, seed,
    budget), never on the worker count.
    """
    if not 1 <= n <= 64:
        raise ValueError(f"need 1 <= n <= 64, got {n}")
    if strategy not in ("constructions", "anneal", "hybrid"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    evals_total = 240 if node_budget is None else node_budget

    best: Optional[tuple[Ratio, Graph]] = None
    used = 0

    def record(r: Ratio, g: Graph) -> None:
        nonlocal best
        if _prefer((r, g), best):
            best = (r, g)

    if strategy in ("constructions", "hybrid"):
        for _, g in _construction_portfolio(n):
            used += 1
            r = _score_exact(g)
            if r is not None:
                record(r, g)

    if strategy in ("anneal", "hybrid") and n >= 2:
        chain_evals = max(0, evals_total - used) // _ANNEAL_CHAINS
        if strategy == "anneal" or best is None:
            starts = [random_graph(n, 0.5, seed=seed * _ANNEAL_CHAINS + i)
                      for i in range(_ANNEAL_CHAINS)]
        else:
            starts = [best[1]] * _ANNEAL_CHAINS
        chain_args = [(starts[i], seed * 1000003 + i, chain_evals)
                      for i in range(_ANNEAL_CHAINS)]

        # Chains are merged through the order-insensitive preference rule, so
        # any execution schedule yields the same record.
        results: list[list[tuple[Ratio, Graph]]] = [[] for _ in range(_ANNEAL_CHAINS)]

        def run_chain(idx: int) -> int:
            start, chain_seed, evals = chain_args[idx]
            return _anneal_chain(n, start, chain_seed, evals,
                                 lambda r, g: results[idx].append((r, g)))

        if workers == 1:
            counts = [run_chain(i) for i in range(_ANNEAL_CHAINS)]
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                counts = list(pool.map(run_chain, range(_ANNEAL_CHAINS)))
        used += sum(counts)
        for found in results:
            for r, g in found:
                record(r, g)

    if best is None:
        # Degenerate budgets still certify the complete graph's ratio 1.
        record(Ratio(n, n), complete_graph(n))
        used += 1
    value, witness = best
    meta = SearchMeta(nodes=used, strategy=strategy, seed=seed)
    return RatioRecord(n=n, value=value, witness=witness, exhaustive=False, meta=meta)


def normalized_ratio_lower(g: Graph) -> RatioWitnessReport:
    """Exact alpha, omega, chi of one graph and the (log2 n)^2/(alpha*omega) bound.

    The bound is a certified lower bound on the normalized extremal ratio
    f(n) * (log2 n)^2 / n, via chi >= n/alpha and the witness inequality
    chi/omega * (log2 n)^2 / n >= (log2 n)^2 / (alpha * omega).
    """
    if g.n < 2:
        raise ValueError("need n >= 2 (log2-squared normalization degenerates)")
    alpha = independence_number(g).value
    omega = clique_number(g).value
    chi = chromatic_number(g).value
    bound = math.log2(g.n) ** 2 / (alpha * omega)
    return RatioWitnessReport(n=g.n, graph=g, chi=chi, omega=omega, alpha=alpha, g_lower=bound)


# -- table verification and persistence --------------------------------------


@dataclass(frozen=True)
class TableVerdict:
    """Outcome of re-verifying a ratio table; ok iff no problems found."""

    ok: bool
    problems: tuple[str, ...] = ()


def verify_ratio_table(records: list[RatioRecord]) -> TableVerdict:
    """Recompute every witness's invariants and check value and monotonicity.

    The maximum ratio never decreases with n — an isolated vertex added to
    any witness preserves both chi and omega — so consecutive records must be
    monotone. An empty list passes vacuously.
    """
    problems: list[str] = []
    prev: Optional[RatioRecord] = None
    for rec in records:
        chi = chromatic_number(rec.witness).value
        omega = clique_number(rec.witness).value
        if chi != rec.value.num or omega != rec.value.den:
            problems.append(
                f"n={rec.n}: witness recomputes to {chi}/{omega}, record says {rec.value}"
            )
        if prev is not None:
            if rec.n != prev.n + 1:
                problems.append(f"n={rec.n}: records not consecutive (previous n={prev.n})")
            if rec.value < prev.value:
                problems.append(
                    f"n={rec.n}: value {rec.value} below f({prev.n}) = {prev.value} "
                    "(monotonicity violated)"
                )
        prev = rec
    return TableVerdict(ok=not problems, problems=tuple(problems))


def save_ratio_table(records: list[RatioRecord], path) -> None:
    """Write records as a JSON array, one object per line, ordered as given."""
    lines = ",\n".join("  " + json.dumps(r.to_json_obj(), sort_keys=True) for r in records)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("[\n" + lines + "\n]\n")


def load_ratio_table(path) -> list[RatioRecord]:
    """Load a JSON array of ratio records, validating each entry."""
    with open(path, "r", encoding="ascii") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: malformed JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON array of records")
    return [RatioRecord.from_json_obj(obj, where=f"{path}: record {i + 1}")
            for i, obj in enumerate(data)]


def ratio_csv(records: list[RatioRecord]) -> str:
    """CSV text (n, f, exhaustive) with f as an exact fraction string."""
    lines = ["n,f,exhaustive"]
    for rec in records:
        lines.append(f"{rec.n},{rec.value.num}/{rec.value.den},{str(rec.exhaustive).lower()}")
    return "\n".join(lines) + "\n"


def export_ratio_csv(records: list[RatioRecord], path) -> None:
    """Write ratio_csv output to a file."""
    with open(path, "w", encoding="ascii") as fh:
        fh.write(ratio_csv(records))


def packaged_ratio_table() -> list[RatioRecord]:
    """The f(n) table shipped with the package (exhaustive for n <= 8)."""
    import importlib.resources as resources

    source = resources.files(__package__).joinpath("data/f_table.json")
    with resources.as_file(source) as path:
        return load_ratio_table(path)
