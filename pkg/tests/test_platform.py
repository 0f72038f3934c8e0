import itertools

import pytest

from hmpareto import (ClusterSpec, Configuration, PlatformError, PlatformSpec,
                      enumerate_configurations, load_platform,
                      validate_configuration)


def make_platform(cb, nb_freqs, cl, nl_freqs):
    big = ClusterSpec("big", cb, tuple(1e8 * (i + 1) for i in range(nb_freqs)))
    little = ClusterSpec("little", cl, tuple(2e8 * (i + 1) for i in range(nl_freqs)))
    return PlatformSpec(big=big, little=little)


def test_odroid_preset_counts(odroid):
    assert odroid.big.core_count == 4
    assert odroid.little.core_count == 4
    assert len(odroid.big.frequencies_hz) == 19
    assert len(odroid.little.frequencies_hz) == 14
    assert odroid.big.frequencies_hz[0] == 200e6
    assert odroid.big.frequencies_hz[-1] == 2e9
    assert odroid.little.frequencies_hz[-1] == 1.5e9


def test_odroid_enumeration_size(odroid):
    assert len(enumerate_configurations(odroid)) == 6384


def test_minimal_enumeration_by_hand():
    platform = make_platform(1, 1, 1, 1)
    configs = enumerate_configurations(platform)
    assert [(c.b, c.little) for c in configs] == [(0, 1), (1, 0), (1, 1)]


def test_zero_core_cluster_rejected():
    with pytest.raises(PlatformError):
        ClusterSpec("big", 0, (1e9,))


@pytest.mark.parametrize("freqs", [(), (0.0, 1e9), (1e9, 1e9), (2e9, 1e9)])
def test_bad_frequency_ladders_rejected(freqs):
    with pytest.raises(PlatformError):
        ClusterSpec("big", 1, freqs)


def test_validate_configuration_cases(odroid):
    assert not validate_configuration(odroid, Configuration(0, 0, 2e9, 1.5e9))
    assert validate_configuration(odroid, Configuration(4, 4, 2e9, 1.5e9))
    assert not validate_configuration(odroid, Configuration(1, 1, 2.1e9, 1.5e9))
    assert not validate_configuration(odroid, Configuration(5, 1, 2e9, 1.5e9))
    assert not validate_configuration(odroid, Configuration(-1, 1, 2e9, 1.5e9))
    assert validate_configuration(odroid, Configuration(0, 1, 2e9, 1.5e9))


@pytest.mark.parametrize("cb,nb,cl,nl", [
    (1, 1, 1, 1), (2, 3, 1, 2), (4, 2, 3, 5), (1, 4, 2, 1), (3, 3, 3, 3),
])
def test_enumeration_matches_filtered_cartesian_product(cb, nb, cl, nl):
    platform = make_platform(cb, nb, cl, nl)
    configs = enumerate_configurations(platform)

    expected_count = (cb + 1) * nb * (cl + 1) * nl - nb * nl
    assert len(configs) == expected_count

    product = [
        Configuration(b, little, fb, fl)
        for b, little, fb, fl in itertools.product(
            range(cb + 2), range(cl + 2),
            platform.big.frequencies_hz + (9e99,),
            platform.little.frequencies_hz + (9e99,))
    ]
    valid = [c for c in product if validate_configuration(platform, c)]
    assert set(configs) == set(valid)
    assert len(set(configs)) == len(configs)
    assert all(validate_configuration(platform, c) for c in configs)


def test_platform_json_round_trip(odroid, tmp_path):
    path = tmp_path / "platform.json"
    path.write_text(odroid.to_json())
    assert load_platform(path) == odroid


def test_load_platform_preset_and_errors(odroid, tmp_path):
    assert load_platform("odroid-xu3") == odroid
    with pytest.raises(PlatformError):
        load_platform("no-such-board")
    bad = tmp_path / "bad.json"
    bad.write_text('{"big": {}}')
    with pytest.raises(PlatformError):
        load_platform(bad)
