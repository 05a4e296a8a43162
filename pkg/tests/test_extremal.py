"""Exact f(n) enumeration, ratio arithmetic, search heuristics, and the table."""

import math

import pytest

from chiomega.extremal import (
    Ratio,
    RatioRecord,
    SearchMeta,
    canonical_graphs,
    load_ratio_table,
    max_ratio_exact,
    max_ratio_search,
    normalized_ratio_lower,
    packaged_ratio_table,
    ratio_csv,
    save_ratio_table,
    verify_ratio_table,
)
from chiomega.graphs import cycle_graph, from_graph6, to_graph6
from chiomega.invariants import BudgetExceeded, chromatic_number, clique_number


def test_ratio_comparisons_are_exact():
    assert Ratio(3, 2) > Ratio(4, 3)
    assert Ratio(4, 2) == Ratio(2, 1)
    assert hash(Ratio(4, 2)) == hash(Ratio(2, 1))
    assert Ratio(1, 1) < Ratio(3, 2) <= Ratio(3, 2)
    # A comparison that would go wrong in floating point for huge entries.
    assert Ratio(10**18 + 1, 10**18) > Ratio(1, 1)
    with pytest.raises(ValueError):
        Ratio(2, 3)  # chi below omega is impossible
    with pytest.raises(ValueError):
        Ratio(1, 0)


def test_canonical_enumeration_counts():
    # Numbers of isomorphism classes of simple graphs on 1..6 vertices.
    expected = [1, 2, 4, 11, 34, 156]
    for n, count in enumerate(expected, start=1):
        assert sum(1 for _ in canonical_graphs(n)) == count


def test_canonical_enumeration_yields_distinct_invariant_profiles():
    # On 4 vertices the 11 classes split into known degree-sequence buckets.
    seqs = sorted(tuple(sorted(g.degree(v) for v in range(4))) for g in canonical_graphs(4))
    assert len(seqs) == 11
    assert seqs[0] == (0, 0, 0, 0)
    assert seqs[-1] == (3, 3, 3, 3)


def test_max_ratio_exact_small_values():
    for n in (1, 2, 3, 4):
        rec = max_ratio_exact(n)
        assert rec.exhaustive
        assert rec.value == Ratio(1, 1)
    rec = max_ratio_exact(5)
    assert rec.exhaustive
    assert rec.value.num == 3 and rec.value.den == 2
    witness = rec.witness
    assert all(witness.degree(v) == 2 for v in range(5))  # C5
    assert chromatic_number(witness).value == 3
    assert clique_number(witness).value == 2


def test_max_ratio_exact_rejects_big_n():
    with pytest.raises(ValueError):
        max_ratio_exact(9)  # needs allow_nine
    with pytest.raises(ValueError):
        max_ratio_exact(10, allow_nine=True)
    with pytest.raises(ValueError):
        max_ratio_exact(0)


def test_max_ratio_exact_budget():
    with pytest.raises(BudgetExceeded):
        max_ratio_exact(6, node_budget=0)
    partial = max_ratio_exact(6, node_budget=200)
    assert not partial.exhaustive
    assert partial.value >= Ratio(1, 1)


def test_max_ratio_exact_worker_independence():
    base = max_ratio_exact(6)
    for workers in (2, 4):
        other = max_ratio_exact(6, workers=workers)
        assert other.value == base.value
        assert other.meta.nodes == base.meta.nodes
        assert to_graph6(other.witness) == to_graph6(base.witness)


def test_max_ratio_exact_tie_break_is_deterministic():
    a = max_ratio_exact(7)
    b = max_ratio_exact(7)
    assert to_graph6(a.witness) == to_graph6(b.witness)
    assert a.meta.nodes == b.meta.nodes


def test_ratio_record_validates_vertex_count():
    with pytest.raises(ValueError):
        RatioRecord(n=4, value=Ratio(1, 1), witness=cycle_graph(5), exhaustive=True)


def test_ratio_record_json_roundtrip():
    rec = max_ratio_exact(5)
    obj = rec.to_json_obj()
    again = RatioRecord.from_json_obj(obj)
    assert again.n == rec.n and again.value == rec.value
    assert to_graph6(again.witness) == obj["witness_graph6"]
    with pytest.raises(ValueError):
        RatioRecord.from_json_obj({"n": 5})


def test_max_ratio_search_strategies():
    for strategy in ("constructions", "anneal", "hybrid"):
        rec = max_ratio_search(12, strategy=strategy, seed=1)
        assert not rec.exhaustive
        assert rec.witness.n == 12
        # The reported value is certified: recomputing reproduces it.
        assert chromatic_number(rec.witness).value == rec.value.num
        assert clique_number(rec.witness).value == rec.value.den
    with pytest.raises(ValueError):
        max_ratio_search(12, strategy="quantum")


def test_max_ratio_search_finds_mycielski_level():
    # On 11 vertices the constructions include the triangle-free chi = 4 graph.
    rec = max_ratio_search(11, strategy="constructions")
    assert rec.value == Ratio(4, 2)


def test_max_ratio_search_determinism():
    a = max_ratio_search(13, strategy="hybrid", seed=5)
    b = max_ratio_search(13, strategy="hybrid", seed=5)
    assert a.value == b.value and to_graph6(a.witness) == to_graph6(b.witness)
    c = max_ratio_search(13, strategy="hybrid", seed=5, workers=3)
    assert c.value == a.value and to_graph6(c.witness) == to_graph6(a.witness)


def test_normalized_ratio_lower():
    report = normalized_ratio_lower(cycle_graph(5))
    assert report.alpha == 2 and report.omega == 2 and report.chi == 3
    assert abs(report.g_lower - math.log2(5) ** 2 / 4) <= 1e-12
    with pytest.raises(ValueError):
        normalized_ratio_lower(cycle_graph(5).induced(0b1).add_isolated(0))


def test_verify_ratio_table_passes_shipped_and_catches_tampering():
    records = packaged_ratio_table()
    assert verify_ratio_table(records).ok
    tampered = list(records)
    good = tampered[4]
    tampered[4] = RatioRecord(n=good.n, value=Ratio(good.value.num + 1, good.value.den),
                              witness=good.witness, exhaustive=good.exhaustive,
                              meta=good.meta)
    verdict = verify_ratio_table(tampered)
    assert not verdict.ok
    assert any("n = 5" in p or "n=5" in p for p in verdict.problems)


def test_verify_ratio_table_checks_monotonicity_and_gaps():
    records = packaged_ratio_table()
    swapped = [records[0], records[2]]  # n jumps from 1 to 3
    verdict = verify_ratio_table(swapped)
    assert not verdict.ok
    assert verify_ratio_table([]).ok


def test_ratio_table_roundtrip_and_csv(tmp_path):
    records = packaged_ratio_table()
    path = tmp_path / "f.json"
    save_ratio_table(records, path)
    again = load_ratio_table(path)
    assert [r.to_json_obj() for r in again] == [r.to_json_obj() for r in records]
    csv = ratio_csv(records)
    lines = csv.strip().split("\n")
    assert lines[0] == "n,f,exhaustive"
    assert lines[5] == "5,3/2,true"
    assert len(lines) == 9


def test_packaged_ratio_table_values():
    records = packaged_ratio_table()
    assert [r.n for r in records] == list(range(1, 9))
    assert all(r.exhaustive for r in records)
    values = [(r.value.num, r.value.den) for r in records]
    assert values[:4] == [(1, 1)] * 4
    assert all(v == (3, 2) for v in values[4:])


def test_search_meta_defaults():
    meta = SearchMeta()
    assert meta.nodes == 0 and meta.seed == 0
