import random
from math import comb

import pytest

from arl.constructions import (
    complete_graph,
    complete_hypergraph,
    expansion,
    minus_family,
    path_graph,
    single_edge,
    turan_count,
)
from arl.coloring import find_rainbow_copy
from arl.hypergraph import has_copy, kn_edges, make_hypergraph
from arl.search import SearchBudget, exact_anti_ramsey, exact_turan, verify_feasibility
from helpers import brute_ar, brute_ex

K3 = complete_graph(3)
K4 = complete_graph(4)
DIAMOND = make_hypergraph(4, 2, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def random_pattern(rng, r, max_v=5):
    n = rng.randint(r, max_v)
    pool = kn_edges(n, r)
    edges = rng.sample(pool, rng.randint(1, min(4, len(pool))))
    return make_hypergraph(n, r, edges)


class TestExactTuran:
    def test_triangle_free_is_turan(self):
        for n in range(3, 8):
            rep = exact_turan(n, [K3])
            assert rep.status == "exact"
            assert rep.value == turan_count(n, 2, 2) == n * n // 4

    def test_k4_small(self):
        for n in range(4, 7):
            assert exact_turan(n, [K4]).value == turan_count(n, 3, 2)

    def test_diamond(self):
        assert exact_turan(5, [DIAMOND]).value == 6

    def test_matching(self):
        # no two disjoint edges: max is a star, n-1 edges
        m2 = make_hypergraph(4, 2, [(0, 1), (2, 3)])
        for n in (4, 5, 6):
            assert exact_turan(n, [m2]).value == n - 1

    def test_single_edge_pattern(self):
        rep = exact_turan(4, [single_edge(2)])
        assert rep.value == 0 and rep.witness.num_edges == 0

    def test_family_vs_members(self):
        fam = minus_family(K4)
        rep = exact_turan(5, fam)
        assert rep.value == brute_ex(5, list(fam), 2)

    def test_r3_values(self):
        # cherry-free means any two triples share at most one vertex, a
        # packing; on 5 points two blocks is the max
        cherry = make_hypergraph(4, 3, [(0, 1, 2), (0, 1, 3)])
        assert exact_turan(5, [cherry]).value == brute_ex(5, [cherry], 3) == 2
        k43 = complete_hypergraph(4, 3)
        assert exact_turan(5, [k43]).value == brute_ex(5, [k43], 3)

    def test_witness_is_feasible_and_optimal_size(self):
        rep = exact_turan(6, [K3])
        assert rep.witness.num_edges == rep.value
        assert not has_copy(K3, rep.witness)
        assert verify_feasibility(rep)

    def test_against_brute_random(self):
        rng = random.Random(77)
        for _ in range(25):
            r = rng.choice([2, 3])
            f = random_pattern(rng, r)
            n = rng.randint(r, 5)
            rep = exact_turan(n, [f])
            assert rep.value == brute_ex(n, [f], r), (n, f.edges)
            assert verify_feasibility(rep)

    def test_deterministic(self):
        a = exact_turan(6, [K3])
        b = exact_turan(6, [K3])
        assert a.value == b.value and a.witness == b.witness and a.nodes == b.nodes

    def test_root_symmetry_same_answer(self):
        for n in (4, 5, 6):
            plain = exact_turan(n, [K3])
            sym = exact_turan(n, [K3], root_symmetry=True)
            assert sym.value == plain.value
            assert sym.witness == plain.witness
            assert sym.nodes <= plain.nodes

    def test_redundant_members_dropped(self):
        # K4 contains K3, so adding K4 changes nothing
        a = exact_turan(5, [K3])
        b = exact_turan(5, [K3, K4])
        assert a.value == b.value and a.nodes == b.nodes

    def test_budget_exhaustion(self):
        rep = exact_turan(7, [K4], budget=SearchBudget(max_nodes=50))
        assert rep.status == "budget_exhausted"
        assert rep.value is None
        assert rep.nodes <= 50 + 1
        if rep.witness is not None:
            assert not has_copy(K4, rep.witness)

    def test_edgeless_member_rejected(self):
        with pytest.raises(ValueError):
            exact_turan(4, [make_hypergraph(3, 2, [])])

    def test_uniformity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            exact_turan(4, [K3, single_edge(3)])

    def test_threads_argument(self):
        assert exact_turan(5, [K3], threads=4).value == exact_turan(5, [K3]).value
        with pytest.raises(ValueError):
            exact_turan(5, [K3], threads=0)


class TestExactAntiRamsey:
    def test_triangle_small(self):
        assert exact_anti_ramsey(3, K3).value == 3
        assert exact_anti_ramsey(4, K3).value == 4
        assert exact_anti_ramsey(5, K3).value == 5

    def test_k4_small(self):
        assert exact_anti_ramsey(4, K4).value == 6
        assert exact_anti_ramsey(5, K4).value == 8

    def test_path(self):
        for n in (2, 3, 4):
            assert exact_anti_ramsey(n, single_edge(2)).value == 1
        assert exact_anti_ramsey(3, path_graph(2)).value == 2
        assert exact_anti_ramsey(4, path_graph(2)).value == 2

    def test_single_edge_no_witness(self):
        rep = exact_anti_ramsey(4, single_edge(2))
        assert rep.value == 1 and rep.witness is None
        assert verify_feasibility(rep)

    def test_witness_quality(self):
        rep = exact_anti_ramsey(4, K3)
        chi = rep.witness
        assert chi.num_colors == rep.value - 1
        assert find_rainbow_copy(chi, K3) is None
        assert verify_feasibility(rep)

    def test_against_brute_random(self):
        rng = random.Random(99)
        tried = 0
        while tried < 12:
            r = rng.choice([2, 3])
            n = rng.randint(r, 4)
            if comb(n, r) > 6:
                continue
            f = random_pattern(rng, r, max_v=n)
            tried += 1
            rep = exact_anti_ramsey(n, f)
            assert rep.value == brute_ar(n, f), (n, f.edges)
            assert verify_feasibility(rep)

    def test_prune_toggle_agrees(self):
        a = exact_anti_ramsey(4, K3, prune_bound=False)
        b = exact_anti_ramsey(4, K3)
        assert a.value == b.value
        assert b.nodes <= a.nodes

    def test_leaf_count_is_bell(self):
        # with pattern too big to embed and pruning off, leaves = set partitions
        big = complete_graph(5)
        rep = exact_anti_ramsey(4, big, prune_bound=False, count_leaves=True)
        assert rep.leaves == 203  # Bell(6)
        assert rep.value == comb(4, 2) + 1

    def test_budget_exhaustion(self):
        rep = exact_anti_ramsey(5, K4, budget=SearchBudget(max_nodes=100))
        assert rep.status == "budget_exhausted" and rep.value is None
        if rep.witness is not None:
            assert find_rainbow_copy(rep.witness, K4) is None

    def test_time_budget(self):
        rep = exact_anti_ramsey(5, K4, budget=SearchBudget(max_seconds=1e-9))
        assert rep.status == "budget_exhausted"

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError):
            exact_anti_ramsey(4, make_hypergraph(3, 2, []))

    def test_trivial_host(self):
        # K_2^2 has one edge; coloring it anything is surjective with 1 color
        rep = exact_anti_ramsey(2, K3)
        assert rep.value == 2  # 1-coloring is rainbow-K3-free, so ar = 1+1
        assert rep.witness.num_colors == 1


class TestVerifyFeasibility:
    def test_rejects_corrupted_turan_witness(self):
        import dataclasses

        rep = exact_turan(5, [K3])
        bad = make_hypergraph(5, 2, kn_edges(5, 2)[: rep.value])
        assert not verify_feasibility(dataclasses.replace(rep, witness=bad))

    def test_rejects_corrupted_coloring_witness(self):
        import dataclasses

        from arl.coloring import make_coloring

        rep = exact_anti_ramsey(4, K3)
        m = rep.value - 1
        bad = make_coloring(4, 2, [i % m for i in range(6)])
        assert not verify_feasibility(dataclasses.replace(rep, witness=bad))

    def test_budget_report_checks_witness_only(self):
        import dataclasses

        # feasibility is certified even without optimality: the best-so-far
        # witness of an exhausted run must still be pattern-free
        rep = exact_turan(7, [K4], budget=SearchBudget(max_nodes=10))
        assert rep.status == "budget_exhausted"
        assert verify_feasibility(rep)
        bad = dataclasses.replace(rep, witness=complete_graph(7))
        assert not verify_feasibility(bad)
