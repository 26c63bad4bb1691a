import itertools
from collections import Counter

import pytest

from oracles import all_rsm_row_orders, all_two_factors, brute_two_starters, ham_decomp_ok, is_factorization, twofold_starter_count
from twofactor.algebra import classify_starter, develop
from twofactor.groups import FiniteAbelianGroup
from twofactor.model import CompletePlusJ, Equipartite, parse_cycle_type, parse_host, parse_type_list
from twofactor.search import (
    EXHAUSTED,
    FOUND,
    PROVED_NONE,
    SearchBudget,
    enumerate_two_factors,
    solve_exhaustive,
)
from twofactor.search.budget import default_seconds
from twofactor.search.hamdecomp import find_ham_decomp
from twofactor.search.rowsum import find_rsm
from twofactor.search.starters import _cycle_types, enumerate_starters, find_starter
from twofactor.verify import verify_certificate

Z = FiniteAbelianGroup.cyclic
T = parse_cycle_type


def solve(host, types, **kw):
    return solve_exhaustive(parse_host(host), parse_type_list(types), **kw)


class TestExhaustive:
    @pytest.mark.parametrize(
        "host,types,status",
        [
            ("K5", "2x[5]", FOUND),
            ("K6-I", "2x[3,3]", PROVED_NONE),
            ("K7", "3x[3,4]", FOUND),
            ("K3[3]", "3x[3^3]", FOUND),
            ("K9", "4x[4,5]", PROVED_NONE),
            ("K8-I", "3x[3,5]", FOUND),
            ("K6+J", "3x[3,3]", PROVED_NONE),
            ("K10-I", "2x[4,6],2x[10]", FOUND),
            ("K12-I", "3x[4^3],2x[6^2]", FOUND),
        ],
    )
    def test_outcomes(self, host, types, status):
        out = solve(host, types, budget=SearchBudget(max_seconds=120))
        assert out.status == status
        if out.found:
            assert verify_certificate(out.value).ok
            assert sorted(out.value.claimed_types) == sorted(parse_type_list(types))
            assert is_factorization(out.value.host, [f.cycles for f in out.value.factors])

    def test_k6_minus_i_is_fast(self):
        out = solve("K6-I", "2x[3,3]")
        assert out.status == PROVED_NONE and out.nodes < 100

    def test_node_budget(self):
        out = solve("K9", "4x[4,5]", budget=SearchBudget(max_nodes=50))
        assert out.status == EXHAUSTED and out.value is None and out.reason

    def test_bad_instance(self):
        with pytest.raises(ValueError):
            solve("K7", "2x[7]")
        with pytest.raises(ValueError):
            solve("K7", "3x[3,3]")

    @pytest.mark.parametrize(
        "host,types",
        [("K5", "2x[5]"), ("K6-I", "2x[3,3]"), ("K6-I", "2x[6]"), ("K7", "3x[3,4]"), ("K7", "3x[7]"),
         ("K3[2]", "2x[6]"), ("K2[4]", "2x[4,4]"), ("K4+J", "2x[4]"), ("K6+J", "3x[6]"), ("K8-I", "3x[4,4]"),
         ("K9", "4x[3^3]"), ("K6-I", "[6],[3,3]")],
    )
    def test_symmetry_breaking_agrees_with_plain_search(self, host, types):
        fast = solve(host, types)
        slow = solve(host, types, symmetry=False, budget=SearchBudget(max_seconds=60))
        assert slow.status != EXHAUSTED
        assert fast.status == slow.status


def complete_edges(v):
    return Counter({(a, b): 1 for a in range(v) for b in range(a + 1, v)})


class TestEnumerateFactors:
    @pytest.mark.parametrize("v,t,count", [(5, "[5]", 12), (6, "[3,3]", 10), (6, "[6]", 60), (7, "[3,4]", 105)])
    def test_counts(self, v, t, count):
        assert len(list(enumerate_two_factors(v, complete_edges(v), T(t)))) == count

    @pytest.mark.parametrize("v", [5, 6, 7])
    def test_against_oracle(self, v):
        mine = set()
        for t in _cycle_types(v):
            mine |= {frozenset(f.edges()) for f in enumerate_two_factors(v, complete_edges(v), t)}
        assert mine == set(all_two_factors(v))


class TestStarters:
    def test_z4_pentagon(self):
        out = find_starter(Z(4), T("[5]"))
        assert out.found and classify_starter(out.value).is_two_starter
        assert verify_certificate(develop(out.value)).ok

    def test_z3_twofold(self):
        out = find_starter(Z(3), T("[4]"), kind="twofold")
        assert out.found and classify_starter(out.value).is_twofold

    def test_z2_triangle(self):
        out = find_starter(Z(2), T("[3]"))
        assert out.status == FOUND
        assert brute_two_starters(2)
        assert verify_certificate(develop(out.value)).ok

    def test_klein_pentagon(self):
        assert find_starter(FiniteAbelianGroup.parse("Z2xZ2"), T("[5]")).status == PROVED_NONE

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_twofold_counts(self, n):
        assert len(enumerate_starters(Z(n))) == twofold_starter_count(n)

    def test_hamiltonian_two_starters_of_z4(self):
        mine = {frozenset(f.edges()) for f in enumerate_starters(Z(4), T("[5]"), kind="two_starter")}
        brute = {frozenset(tuple(sorted((p[k], p[(k + 1) % 5]))) for k in range(5)) for p in brute_two_starters(4)}
        assert mine == brute and mine

    @pytest.mark.parametrize("G,t,kind", [(Z(4), "[4]", "twofold"), (Z(4), "[5]", "thrice"), (Z(5), "[4,2]", "twofold")])
    def test_rejects(self, G, t, kind):
        with pytest.raises(ValueError):
            find_starter(G, parse_cycle_type(t, min_length=2), kind)


class TestRowSum:
    def test_z5(self):
        out = find_rsm(Z(5), [1, 4], 3, [5, 5])
        assert out.found
        m = out.value
        assert sorted(m.orders()) == [5, 5] and not m.problems()

    def test_zero_matrix(self):
        out = find_rsm(Z(3), [0], 4, [1])
        assert out.found and out.value.entries == ((0, 0, 0, 0),)

    def test_z3_pair(self):
        out = find_rsm(Z(3), [1, 2], 2, [3, 3])
        assert out.found and out.value.entries == ((1, 1), (2, 2))

    @pytest.mark.parametrize("n,S,g", [(3, (1, 2), 2), (3, (1, 2), 3), (5, (1, 4), 3), (5, (1, 2, 3, 4), 2),
                                       (4, (1, 2, 3), 3)])
    def test_against_brute_force(self, n, S, g):
        reachable = all_rsm_row_orders(n, S, g)
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        for omega in itertools.combinations_with_replacement(divisors, len(S)):
            out = find_rsm(Z(n), S, g, omega)
            assert out.status == (FOUND if tuple(sorted(omega)) in reachable else PROVED_NONE), omega

    def test_bad_args(self):
        with pytest.raises(ValueError):
            find_rsm(Z(5), [1, 4], 3, [5])
        with pytest.raises(ValueError):
            find_rsm(Z(5), [1, 1], 3, [5, 5])


class TestHamDecomp:
    def test_n9(self):
        out = find_ham_decomp(9, [1, 2])
        assert out.found and ham_decomp_ok(9, [1, 2], out.value)

    def test_trivial(self):
        out = find_ham_decomp(7, [3])
        assert out.found and out.value == [(0, 3, 6, 2, 5, 1, 4)]

    @pytest.mark.parametrize("n,S", [(21, [3, 6, 7]), (31, [1, 2, 3, 4, 5, 6]), (40, [4, 5, 8, 10, 16])])
    def test_paired(self, n, S):
        out = find_ham_decomp(n, S, SearchBudget(max_seconds=30))
        assert out.found and ham_decomp_ok(n, S, out.value)

    def test_disconnected(self):
        with pytest.raises(ValueError):
            find_ham_decomp(8, [2, 4])


def test_budget_env(monkeypatch):
    monkeypatch.setenv("FORGE_BUDGET_SECONDS", "7.5")
    assert default_seconds() == 7.5
    assert SearchBudget.from_env().max_seconds == 7.5
    assert SearchBudget.from_env(max_seconds=2).max_seconds == 2


def test_plus_j_four_cycles():
    assert solve_exhaustive(CompletePlusJ(4), [T("[4]")] * 2).found


def test_k2_6_has_no_six_six_factorization():
    assert solve_exhaustive(Equipartite(2, 6), parse_type_list("3x[6,6]"),
                            SearchBudget(max_seconds=60)).status == PROVED_NONE
