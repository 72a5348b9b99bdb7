import itertools

import pytest

from confgal.oracle import (
    CharacterTable,
    convolve,
    delta,
    negative_parts,
    partition_count,
    simple_character_oracle,
    verma_character_oracle,
)


def brute_force_count(parts, n):
    """Enumerate multiplicity vectors directly."""
    ranges = [range(n // p + 1) for p in parts]
    return sum(1 for mult in itertools.product(*ranges) if sum(m * p for m, p in zip(mult, parts)) == n)


@pytest.mark.parametrize("parts", [[1], [1, 2], [2, 2], [1, 3, 5], [2, 1, 3], [4]])
def test_partition_dp_matches_enumeration(parts):
    for n in range(13):
        assert partition_count(parts, n) == brute_force_count(parts, n)


def test_known_sequences():
    # partitions into odd parts <= 3
    assert verma_character_oracle("heisenberg", "3/2", 8).dims == (1, 1, 1, 2, 2, 2, 3, 3, 3)
    assert verma_character_oracle("extended", "1/2", 6).dims == (1, 1, 2, 2, 3, 3, 4)
    assert verma_character_oracle("centerless", "1", 4).dims == (1, 0, 2, 0, 3)
    assert verma_character_oracle("sl2", "1", 5).dims == (1, 0, 1, 0, 1, 0)


def test_negative_parts():
    assert negative_parts("extended", "5/2") == [2, 1, 3, 5]
    assert negative_parts("centerless", "2") == [2, 2, 4]
    assert negative_parts("heisenberg", "1/2") == [1]


def test_steps():
    assert verma_character_oracle("centerless", "2", 4).step == 2
    assert verma_character_oracle("extended", "3/2", 4).step == 1


def test_simple_character_is_fock_times_window():
    ch = simple_character_oracle("1/2", 1, 6)
    assert ch.dims == (1, 1, 2, 2, 2, 2, 2)
    assert simple_character_oracle("3/2", 0, 8).dims == verma_character_oracle("heisenberg", "3/2", 8).dims


def test_convolve_identity_and_truncation():
    a = verma_character_oracle("extended", "3/2", 7)
    assert convolve(a, delta(7)).dims == a.dims
    assert convolve(a, delta(3)).depth == 3


def test_json_roundtrip():
    from fractions import Fraction

    ch = CharacterTable((1, 2, 3), 1, Fraction(-1, 2))
    assert CharacterTable.from_json(ch.to_json()) == ch
    assert ch.to_json() == '{"top_weight": "-1/2", "step": 1, "dims": [1, 2, 3]}'


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        simple_character_oracle("1", 0, 4)
    with pytest.raises(ValueError):
        CharacterTable((1, -1))
