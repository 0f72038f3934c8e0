import numpy as np
import pytest

from hmpareto import (Configuration, ModelError, PerfParams, PowerParams,
                      enumerate_configurations, estimate, phase_times,
                      power_parallel, power_sequential, predict_all,
                      predict_energy, predict_time)

from conftest import ALPHA_B, ALPHA_L, BETA_B, BETA_L, F_REF, PERF


def cfg(b, little, fb=2e9, fl=1.5e9):
    return Configuration(b, little, fb, fl)


class TestPredictTime:
    def test_single_little_core_at_reference_frequency(self):
        p = PerfParams(f=0.37, perf=2.0, t_l_ref_s=123.0, f_ref_hz=8e8)
        assert predict_time(p, cfg(0, 1, fl=8e8)) == pytest.approx(123.0)

    def test_perfect_scaling_on_two_little_cores(self):
        p = PerfParams(f=1.0, perf=2.0, t_l_ref_s=100.0, f_ref_hz=8e8)
        assert predict_time(p, cfg(0, 2, fl=8e8)) == pytest.approx(50.0)

    def test_smallpt_style_hand_evaluation(self, smallpt_perf_params):
        # Independent term-by-term arithmetic for f=0.9898, perf=1.897,
        # T_L_ref=100 s at 800 MHz, b=4, L=4, F_b=2 GHz, F_L=1.5 GHz.
        t_seq = 100.0 * (1 - 0.9898) * 800e6 / (1.897 * 2e9)
        t_par = 100.0 * 0.9898 * 800e6 / (4 * 1.897 * 2e9 + 4 * 1.5e9)
        expected = t_seq + t_par
        assert expected == pytest.approx(3.954, abs=5e-4)
        assert predict_time(smallpt_perf_params, cfg(4, 4)) == \
            pytest.approx(expected, rel=1e-12)

    def test_big_only_configuration_is_finite(self):
        p = PerfParams(f=0.9, perf=1.897, t_l_ref_s=100.0, f_ref_hz=8e8)
        t = predict_time(p, cfg(2, 0))
        t_par = 100.0 * 0.9 * 8e8 / (2 * 1.897 * 2e9)
        t_seq = 100.0 * 0.1 * 8e8 / (1.897 * 2e9)
        assert t == pytest.approx(t_seq + t_par, rel=1e-12)

    def test_no_active_core_is_a_domain_error(self, smallpt_perf_params):
        with pytest.raises(ModelError):
            predict_time(smallpt_perf_params, cfg(0, 0))


class TestPower:
    def test_parallel_hand_sum(self, board_power_params):
        expected = (4 * ALPHA_B * 2e9**3 + 4 * BETA_B * 2e9
                    + 4 * ALPHA_L * 1.5e9**3 + 4 * BETA_L * 1.5e9)
        assert expected == pytest.approx(11.50, abs=0.01)
        assert power_parallel(board_power_params, cfg(4, 4)) == \
            pytest.approx(expected, rel=1e-12)

    def test_parallel_pure_static_at_zero_active_cores(self, board_power_params):
        got = power_parallel(board_power_params, cfg(0, 0))
        assert got == pytest.approx(4 * BETA_B * 2e9 + 4 * BETA_L * 1.5e9,
                                    rel=1e-12)

    def test_parallel_linear_in_big_count(self, board_power_params):
        base = power_parallel(board_power_params, cfg(0, 2))
        one = power_parallel(board_power_params, cfg(1, 2))
        two = power_parallel(board_power_params, cfg(2, 2))
        assert two - base == pytest.approx(2 * (one - base), rel=1e-12)

    def test_sequential_hand_sum_big_branch(self, board_power_params):
        expected = ALPHA_B * 8e27 + 4 * BETA_B * 2e9 + 4 * BETA_L * 1.5e9
        assert expected == pytest.approx(3.70, abs=0.01)
        assert power_sequential(board_power_params, cfg(1, 4)) == \
            pytest.approx(expected, rel=1e-12)

    def test_sequential_independent_of_big_count(self, board_power_params):
        assert power_sequential(board_power_params, cfg(1, 2)) == \
            power_sequential(board_power_params, cfg(4, 2))

    def test_sequential_little_branch_equals_parallel_single_little(
            self, board_power_params):
        assert power_sequential(board_power_params, cfg(0, 3)) == \
            pytest.approx(power_parallel(board_power_params, cfg(0, 1)),
                          rel=1e-12)


class TestPredictEnergy:
    def test_pure_sequential_energy(self, board_power_params):
        p = PerfParams(f=0.0, perf=PERF, t_l_ref_s=50.0, f_ref_hz=F_REF)
        c = cfg(3, 2)
        t_seq, _ = phase_times(p, c)
        assert predict_energy(p, board_power_params, c) == \
            pytest.approx(t_seq * power_sequential(board_power_params, c),
                          rel=1e-12)

    def test_pure_parallel_energy(self, board_power_params):
        p = PerfParams(f=1.0, perf=PERF, t_l_ref_s=50.0, f_ref_hz=F_REF)
        c = cfg(3, 2)
        _, t_par = phase_times(p, c)
        assert predict_energy(p, board_power_params, c) == \
            pytest.approx(t_par * power_parallel(board_power_params, c),
                          rel=1e-12)

    def test_smallpt_energy_decomposition(self, smallpt_perf_params,
                                          board_power_params):
        c = cfg(4, 4)
        t_seq, t_par = phase_times(smallpt_perf_params, c)
        expected = (t_seq * power_sequential(board_power_params, c)
                    + t_par * power_parallel(board_power_params, c))
        assert predict_energy(smallpt_perf_params, board_power_params, c) == \
            pytest.approx(expected, rel=1e-9)

    def test_decomposition_identity_randomized(self, odroid):
        rng = np.random.default_rng(42)
        configs = enumerate_configurations(odroid)
        for _ in range(500):
            p = PerfParams(f=rng.uniform(0, 1), perf=rng.uniform(0.2, 5),
                           t_l_ref_s=rng.uniform(1, 1000),
                           f_ref_hz=rng.uniform(1e8, 3e9))
            q = PowerParams(alpha_b=rng.uniform(0, 1e-27),
                            beta_b=rng.uniform(0, 1e-9),
                            alpha_l=rng.uniform(0, 1e-27),
                            beta_l=rng.uniform(0, 1e-9), c_b=4, c_l=4)
            c = configs[rng.integers(len(configs))]
            t_seq, t_par = phase_times(p, c)
            expected = (t_seq * power_sequential(q, c)
                        + t_par * power_parallel(q, c))
            assert predict_energy(p, q, c) == pytest.approx(expected, rel=1e-9)

    def test_no_active_core_is_a_domain_error(self, smallpt_perf_params,
                                              board_power_params):
        with pytest.raises(ModelError):
            predict_energy(smallpt_perf_params, board_power_params, cfg(0, 0))


class TestPredictAll:
    def test_odroid_count_and_order(self, odroid, smallpt_perf_params,
                                    board_power_params):
        estimates = predict_all(smallpt_perf_params, board_power_params, odroid)
        assert len(estimates) == 6384
        assert [e.config for e in estimates] == enumerate_configurations(odroid)

    def test_tiny_platform_matches_individual_calls(
            self, tiny_platform, board_power_params):
        p = PerfParams(f=0.8, perf=2.0, t_l_ref_s=10.0, f_ref_hz=8e8)
        for e in predict_all(p, board_power_params, tiny_platform):
            assert e == estimate(p, board_power_params, e.config)

    def test_all_estimates_strictly_positive(self, odroid, smallpt_perf_params,
                                             board_power_params):
        for e in predict_all(smallpt_perf_params, board_power_params, odroid):
            assert e.time_s > 0
            assert e.energy_j > 0


class TestInvariants:
    def test_time_monotone_power_monotone(self, board_power_params):
        p = PerfParams(f=0.7, perf=1.897, t_l_ref_s=100.0, f_ref_hz=8e8)
        ladder = [2e8, 5e8, 1e9, 2e9]
        times = [predict_time(p, cfg(2, 2, fb=f)) for f in ladder]
        assert times == sorted(times, reverse=True)
        times = [predict_time(p, cfg(2, 2, fl=f)) for f in ladder]
        assert times == sorted(times, reverse=True)
        times = [predict_time(p, cfg(b, 2)) for b in range(1, 5)]
        assert times == sorted(times, reverse=True)
        powers = [power_parallel(board_power_params, cfg(2, 2, fb=f))
                  for f in ladder]
        assert powers == sorted(powers)

    def test_time_and_energy_scale_linearly_with_reference_time(
            self, board_power_params):
        base = PerfParams(f=0.9, perf=1.897, t_l_ref_s=10.0, f_ref_hz=8e8)
        scaled = PerfParams(f=0.9, perf=1.897, t_l_ref_s=70.0, f_ref_hz=8e8)
        c = cfg(3, 1)
        assert predict_time(scaled, c) == pytest.approx(
            7.0 * predict_time(base, c), rel=1e-12)
        assert predict_energy(scaled, board_power_params, c) == pytest.approx(
            7.0 * predict_energy(base, board_power_params, c), rel=1e-12)


def test_parameter_validation():
    with pytest.raises(ModelError):
        PerfParams(f=1.2, perf=1.0, t_l_ref_s=1.0, f_ref_hz=1e9)
    with pytest.raises(ModelError):
        PerfParams(f=0.5, perf=0.0, t_l_ref_s=1.0, f_ref_hz=1e9)
    with pytest.raises(ModelError):
        PowerParams(alpha_b=-1e-30, beta_b=0, alpha_l=0, beta_l=0, c_b=4, c_l=4)
    with pytest.raises(ModelError):
        PowerParams(alpha_b=0, beta_b=0, alpha_l=0, beta_l=0, c_b=0, c_l=4)
