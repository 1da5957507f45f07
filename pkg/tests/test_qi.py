from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cheegerkit import DomainError, ParameterError
from cheegerkit import generators as gen
from cheegerkit.qi import (
    CheckStatus,
    QiInstance,
    beta_bound,
    density_bound_check,
    fiber_bound_check,
    parse_map,
    preimage_small_check,
    verify_qi,
    worst_preimage_check,
)

from corpus import qi_instances

half = Fraction(1, 2)
C4, C8 = gen.cycle(4), gen.cycle(8)
DOUBLE = tuple(2 * i for i in range(4))


def identity(G, L=1, A=0):
    return QiInstance(G, G, tuple(range(G.n)), L, A)


class TestVerify:
    def test_identity(self):
        assert verify_qi(identity(C8)).ok

    def test_doubling_needs_slack(self):
        assert verify_qi(QiInstance(C4, C8, DOUBLE, 2, 1)).ok
        report = verify_qi(QiInstance(C4, C8, DOUBLE, 1, 0))
        assert not report.ok
        assert (0, 1, "upper") in report.pair_violations
        assert report.density_violations == [1, 3, 5, 7]

    def test_instance_validation(self):
        with pytest.raises(ParameterError):
            identity(C8, L=Fraction(1, 2))
        with pytest.raises(DomainError):
            QiInstance(C4, C8, (0, 1, 2), 1, 0)
        with pytest.raises(DomainError):
            QiInstance(C4, C4, (0, 1, 2, 9), 1, 0)
        with pytest.raises(DomainError):
            identity(gen.complete(2).__class__.from_edges(4, [(0, 1), (2, 3)]))

    @pytest.mark.parametrize("name", sorted(qi_instances()))
    def test_larger_constants_stay_quasi_isometric(self, name):
        X, Y, f, L, A = qi_instances()[name]
        inst = QiInstance(X, Y, f, L, A)
        assert verify_qi(inst).ok
        assert verify_qi(inst.with_constants(L + 1, A)).ok
        assert verify_qi(inst.with_constants(L, A + Fraction(1, 2))).ok

    def test_composition(self):
        # C8 -> C4 -> C8, constants (L1 L2, L2 A1 + A2)
        down = QiInstance(C8, C4, tuple(i % 4 for i in range(8)), 1, 4)
        up = QiInstance(C4, C8, DOUBLE, 2, 1)
        assert verify_qi(down).ok and verify_qi(up).ok
        f = tuple(up.f[down.f[x]] for x in range(8))
        assert verify_qi(QiInstance(C8, C8, f, down.L * up.L, up.L * down.A + up.A)).ok


class TestBeta:
    @pytest.mark.parametrize(
        "D, L, A, alpha, beta",
        [
            (3, 1, 0, half, Fraction(1, 162)),
            (2, 1, 0, 1, Fraction(1, 16)),
            (2, Fraction(3, 2), 0, 1, Fraction(1, 32)),
        ],
    )
    def test_values(self, D, L, A, alpha, beta):
        assert beta_bound(D, L, A, alpha) == beta

    def test_non_integral_exponent(self):
        with pytest.raises(ParameterError, match="round L and A up"):
            beta_bound(2, Fraction(3, 2), half, 1)

    def test_floats_rejected(self):
        with pytest.raises(ParameterError):
            beta_bound(2, 1.0, 0, half)

    @given(st.integers(2, 5), st.integers(1, 3), st.integers(0, 3), st.integers(0, 3))
    def test_monotone_in_constants(self, D, L, A, extra):
        base = beta_bound(D, L, A, half)
        assert beta_bound(D, L + extra, A, half) <= base
        assert beta_bound(D, L, A + extra, half) <= base
        assert beta_bound(D + extra, L, A, half) <= base


class TestBounds:
    def test_fiber_example(self):
        inst = QiInstance(C8, C4, tuple(i % 4 for i in range(8)), 1, 4)
        assert fiber_bound_check(inst) == (True, 2, 128)

    def test_density_example(self):
        holds, sizes = density_bound_check(QiInstance(C4, C8, DOUBLE, 2, 1))
        assert holds and sizes == {"Y": 8, "image": 4, "X": 4, "factor": 4}

    def test_non_quasi_isometry_rejected(self):
        with pytest.raises(DomainError):
            fiber_bound_check(QiInstance(C4, C8, DOUBLE, 1, 0))

    def test_fractional_constants_round_up(self):
        inst = QiInstance(C4, C8, DOUBLE, 2, half)
        assert verify_qi(inst).ok is False  # odd vertices sit at distance 1 > 1/2
        inst = QiInstance(C8, C4, tuple(i % 4 for i in range(8)), Fraction(3, 2), 3)
        holds, _, bound = fiber_bound_check(inst)
        assert holds and bound == 2 ** (2 * 5 + 1)


class TestPreimage:
    def test_empty_set_is_vacuous(self):
        assert preimage_small_check(identity(C8), set(), half) is CheckStatus.VACUOUS

    def test_long_cycle_holds(self):
        inst = identity(gen.cycle(64))
        assert beta_bound(2, 1, 0, half) == Fraction(1, 32)
        assert preimage_small_check(inst, {5}, half) is CheckStatus.HOLDS
        with pytest.raises(DomainError, match="not beta-small"):
            preimage_small_check(inst, {5, 6}, half)

    def test_worst_case_uses_heaviest_fibers(self):
        inst = QiInstance(gen.cycle(64), gen.cycle(32), tuple(i % 32 for i in range(64)), 1, 32)
        status, beta, B = worst_preimage_check(inst, 1)
        assert beta == Fraction(1, 2**68)
        assert status is CheckStatus.VACUOUS and B == frozenset()


class TestParseMap:
    def test_roundtrip(self):
        assert parse_map("# f\n0 0\n2 4\n1 2\n3 6\n", 4) == DOUBLE

    @pytest.mark.parametrize("text", ["0 0\n0 1", "0 0", "0 0\n1", "0 0\n5 1", "0 x\n1 1"])
    def test_errors(self, text):
        with pytest.raises(DomainError):
            parse_map(text, 2)
