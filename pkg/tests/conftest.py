import pytest

from hmpareto import (ClusterSpec, PerfParams, PlatformSpec, PowerParams,
                      odroid_xu3)

# Board-fitted constants reused across tests as realistic ground truth.
ALPHA_B = 2.914e-28
BETA_B = 9.342e-11
ALPHA_L = 5.953e-29
BETA_L = 1.033e-10
PERF = 1.897
F_REF = 800e6

PARALLEL_FRACTIONS = {
    "black-scholes": 0.7743,
    "bodytrack": 0.9384,
    "freqmine": 0.9343,
    "smallpt": 0.9898,
    "x264": 0.888,
    "kmeans": 0.6381,
    "particle-filter": 0.9251,
    "lavamd": 0.9961,
}


@pytest.fixture(scope="session")
def odroid():
    return odroid_xu3()


@pytest.fixture(scope="session")
def board_power_params():
    return PowerParams(alpha_b=ALPHA_B, beta_b=BETA_B, alpha_l=ALPHA_L,
                       beta_l=BETA_L, c_b=4, c_l=4)


@pytest.fixture(scope="session")
def smallpt_perf_params():
    return PerfParams(f=0.9898, perf=PERF, t_l_ref_s=100.0, f_ref_hz=F_REF)


@pytest.fixture
def tiny_platform():
    big = ClusterSpec("big", 1, (1e9, 2e9))
    little = ClusterSpec("little", 1, (4e8, 8e8))
    return PlatformSpec(big=big, little=little)
