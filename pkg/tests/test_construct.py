import pytest

from oracles import ham_decomp_ok, host_edges, is_factorization
from twofactor.construct import (
    BlockCert,
    ProjectionInput,
    RowSumMatrix,
    blowup,
    circulant_ham_decomp,
    cn_factorize_blown,
    compose_equipartite,
    haggkvist_double,
    project,
    projection_factor,
    refine_blocks,
    rsm_apply,
    verify_blocks,
    walecki,
)
from twofactor.construct.blowup import BlowupError
from twofactor.construct.circulant import CirculantError, check_circulant, multiples_cycle
from twofactor.construct.haggkvist import HaggkvistError, as_template, doubled_cycle
from twofactor.construct.projection import ProjectionError, blown_host
from twofactor.construct.rowsum import RowSumError
from twofactor.groups import FiniteAbelianGroup
from twofactor.model import (
    CompleteMinusI,
    CompleteOdd,
    Equipartite,
    FactorizationCert,
    TwoFactor,
    cycle_type_of,
    parse_cycle_type,
    parse_type_list,
)
from twofactor.search import solve_exhaustive
from twofactor.verify import verify_certificate, verify_two_factor

Z = FiniteAbelianGroup.cyclic
NINE_CYCLE = (0, 1, 4, 6, 5, 2, 7, 8, 3)


def factors_of(cert):
    return [f.cycles for f in cert.factors]


@pytest.fixture(scope="module")
def k33():
    out = solve_exhaustive(Equipartite(3, 3), parse_type_list("3x[3^3]"))
    assert out.found
    return out.value


class TestWalecki:
    def test_k3(self):
        (f,) = walecki(3).factors
        assert sorted(f.edges()) == [(0, 1), (0, 2), (1, 2)]

    def test_k5(self):
        cert = walecki(5)
        assert len(cert.factors) == 2 and verify_certificate(cert).ok

    def test_k8_minus_i(self):
        cert = walecki(8)
        assert cert.host == CompleteMinusI(8) and len(cert.factors) == 3
        assert is_factorization(cert.host, factors_of(cert))

    @pytest.mark.parametrize("v", [2, 1])
    def test_too_small(self, v):
        with pytest.raises(ValueError):
            walecki(v)


class TestHaggkvist:
    def check(self, n, f, pair):
        host = doubled_cycle(n)
        for x in pair:
            assert cycle_type_of(x) == f
        assert is_factorization(host, [x.cycles for x in pair])

    def test_mixed_lengths_n12(self):
        f = parse_cycle_type("[4,6,6,8]")
        self.check(12, f, haggkvist_double(12, f, arc_order=[6, 8, 4, 6]))

    def test_hamiltonian_n3(self):
        f = parse_cycle_type("[6]")
        self.check(3, f, haggkvist_double(3, f))

    def test_n6(self):
        f = parse_cycle_type("[4,8]")
        self.check(6, f, haggkvist_double(6, f))

    def test_template(self):
        cert = as_template(4, haggkvist_double(4, parse_cycle_type("[8]")))
        assert verify_certificate(cert).ok and cert.host == doubled_cycle(4)

    @pytest.mark.parametrize("n,f", [(4, "[3,5]"), (4, "[4]"), (2, "[4]")])
    def test_rejects(self, n, f):
        with pytest.raises(HaggkvistError):
            haggkvist_double(n, parse_cycle_type(f))

    def test_bad_arc_order(self):
        with pytest.raises(HaggkvistError):
            haggkvist_double(5, parse_cycle_type("[4,6]"), arc_order=[4, 4])


class TestProjection:
    def test_nine_cycle_into_five_layers(self):
        got = project(ProjectionInput(NINE_CYCLE, 5))
        assert got == [(0, 0), (1, 1), (2, 4), (3, 6), (4, 5), (0, 2), (1, 7), (0, 8), (1, 3)]

    def test_diagonal_when_g_equals_n(self):
        h = (0, 3, 1, 4, 2)
        assert project(ProjectionInput(h, 5)) == list(enumerate(h))

    def test_small(self):
        assert project(ProjectionInput((0, 1, 2, 3, 4), 3)) == [(0, 0), (1, 1), (2, 2), (0, 3), (1, 4)]

    def test_reverse_and_shift(self):
        got = project(ProjectionInput((0, 1, 2, 3, 4), 3, shift=1, reversed=True))
        assert [layer for layer, _ in got] == [1, 0, 2, 1, 0]

    def test_factor(self):
        host = blown_host(3, 5, [1, 4])
        f = projection_factor((0, 1, 2, 3, 4), 3)
        assert verify_two_factor(host, f).ok
        assert cycle_type_of(f) == parse_cycle_type("[5^3]")

    def test_forward_and_reverse_disjoint(self):
        fwd = projection_factor(NINE_CYCLE, 5)
        rev = projection_factor(NINE_CYCLE, 5, reversed=True)
        assert cycle_type_of(fwd) == parse_cycle_type("[9^5]")
        assert not set(fwd.edges()) & set(rev.edges())

    @pytest.mark.parametrize("h,g", [((0, 1, 2, 3), 3), ((0, 1, 2, 3, 4), 7), ((0, 1, 2, 3, 4), 4), ((0, 0, 1), 3)])
    def test_rejects(self, h, g):
        with pytest.raises(ProjectionError):
            ProjectionInput(h, g)


class TestCn:
    def test_n5(self):
        cert = cn_factorize_blown(3, 5, [1], circulant_ham_decomp(5, [1]))
        assert len(cert.factors) == 2 and verify_certificate(cert).ok

    def test_n9(self):
        cert = cn_factorize_blown(5, 9, [1, 2], circulant_ham_decomp(9, [1, 2]))
        assert len(cert.factors) == 4
        assert set(cert.claimed_types) == {parse_cycle_type("[9^5]")}
        assert is_factorization(cert.host, factors_of(cert))

    def test_n7_three_differences(self):
        cert = cn_factorize_blown(3, 7, [1, 2, 3], circulant_ham_decomp(7, [1, 2, 3]))
        assert cert.host.degree == 12 and len(cert.factors) == 6
        assert verify_certificate(cert).ok


class TestCirculant:
    def test_coprime_singleton(self):
        assert multiples_cycle(7, 2) == (0, 2, 4, 6, 1, 3, 5)
        assert circulant_ham_decomp(7, [3]) == [multiples_cycle(7, 3)]

    def test_searched(self):
        cycles = circulant_ham_decomp(9, [1, 2])
        assert len(cycles) == 2 and ham_decomp_ok(9, [1, 2], cycles)

    @pytest.mark.parametrize("n,S", [(6, [2]), (8, [2, 4]), (9, [3]), (8, [4])])
    def test_rejects(self, n, S):
        with pytest.raises(CirculantError):
            check_circulant(n, S)


class TestRowSum:
    def test_zero_row(self):
        m = RowSumMatrix(Z(3), (0,), 4, ((0, 0, 0, 0),))
        cert = rsm_apply(m)
        assert cert.claimed_types == (parse_cycle_type("[4^3]"),)
        assert verify_certificate(cert).ok

    def test_z5(self):
        m = RowSumMatrix(Z(5), (1, 4), 3, ((1, 1, 4), (4, 4, 1)))
        assert m.row_sums() == [1, 4] and m.orders() == [5, 5]
        cert = rsm_apply(m)
        assert cert.claimed_types == (parse_cycle_type("[15]"),) * 2
        assert is_factorization(cert.host, factors_of(cert))

    def test_g2_multigraph(self):
        m = RowSumMatrix(Z(4), (1, 3), 2, ((1, 1), (3, 3)))
        cert = rsm_apply(m)
        assert cert.claimed_types == (parse_cycle_type("[4^2]"),) * 2
        assert verify_certificate(cert).ok

    def test_non_permutation_column(self):
        m = RowSumMatrix(Z(5), (1, 4), 3, ((1, 1, 1), (1, 4, 4)))
        assert m.problems()
        with pytest.raises(RowSumError):
            rsm_apply(m)


class TestBlowup:
    def test_triangle(self):
        tri = FactorizationCert(Equipartite(3, 1), (TwoFactor(((0, 1, 2),)),))
        bc = blowup(tri, 2)
        assert bc.host == Equipartite(3, 2) and len(bc.factors) == 1
        assert verify_blocks(bc).ok
        cert = refine_blocks(bc, as_template(3, haggkvist_double(3, parse_cycle_type("[6]"))))
        assert len(host_edges(cert.host)) == 12 and verify_certificate(cert).ok

    def test_identity(self, k33):
        bc = blowup(k33, 1)
        assert refine_blocks(bc).factors == k33.factors

    def test_k33(self, k33):
        bc = blowup(k33, 2)
        assert bc.host == Equipartite(3, 6) and len(bc.factors) == 3
        assert verify_blocks(bc).ok
        cert = refine_blocks(bc, as_template(3, haggkvist_double(3, parse_cycle_type("[6]"))))
        assert len(cert.factors) == 6 and is_factorization(cert.host, factors_of(cert))

    def test_tampered_blocks(self, k33):
        bc = blowup(k33, 2)
        f0 = bc.factors[0]
        swapped = ((f0[0][0], f0[1][0], f0[0][2]),) + f0[1:]
        bad = BlockCert(bc.host, bc.g, bc.n, (swapped,) + bc.factors[1:])
        assert not verify_blocks(bad).ok

    def test_needs_template(self, k33):
        with pytest.raises(BlowupError):
            refine_blocks(blowup(k33, 2))

    def test_wrong_template(self, k33):
        with pytest.raises(BlowupError):
            refine_blocks(blowup(k33, 2), as_template(4, haggkvist_double(4, parse_cycle_type("[8]"))))

    def test_needs_equipartite(self):
        with pytest.raises(BlowupError):
            blowup(walecki(5), 2)


class TestCompose:
    def test_k9(self, k33):
        cert = compose_equipartite(k33, [walecki(3)] * 3)
        assert cert.host == CompleteOdd(9) and len(cert.factors) == 4
        assert is_factorization(cert.host, factors_of(cert))

    def test_k8_minus_i(self):
        eq = solve_exhaustive(Equipartite(2, 4), parse_type_list("2x[4^2]")).value
        cert = compose_equipartite(eq, [walecki(4)] * 2)
        assert cert.host.order == 8 and len(cert.factors) == 3
        assert verify_certificate(cert).ok

    def test_k15(self):
        eq = solve_exhaustive(Equipartite(3, 5), parse_type_list("5x[15]")).value
        cert = compose_equipartite(eq, [walecki(5)] * 3)
        assert cert.host == CompleteOdd(15) and len(cert.factors) == 7
        assert verify_certificate(cert).ok

    def test_part_count(self, k33):
        with pytest.raises(BlowupError):
            compose_equipartite(k33, [walecki(3)] * 2)

    def test_part_kind(self, k33):
        with pytest.raises(BlowupError):
            compose_equipartite(k33, [walecki(5)] * 3)
