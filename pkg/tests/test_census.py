"""Exhaustive enumeration, orbit counting, bounds, census persistence."""

from __future__ import annotations

import itertools

import pytest

from fillperm import (
    BoundExceeded,
    Permutation,
    big_q,
    census_records,
    count_orbits,
    enumerate_filling,
    generators,
    is_valid,
    read_census,
    tau,
    upper_bound,
    write_census,
)


def brute_force_solutions(n):
    """Oracle: filter all of S_4n by alternation plus the crossing equation.

    Only feasible for n = 1 (24 permutations).
    """
    m = 4 * n
    t = tau(n)
    q_n = big_q(n) ** (2 * n)
    out = []
    for images in itertools.permutations(range(1, m + 1)):
        if any((img - e - 1) % 2 for e, img in enumerate(images, start=1)):
            continue
        p = Permutation(images)
        if p * q_n * p == t:
            out.append(p)
    return out


def test_enumerate_n1_against_brute_force():
    oracle = {p.one_line() for p in brute_force_solutions(1)}
    assert oracle == {(2, 3, 4, 1), (4, 1, 2, 3)}  # (1,2,3,4) and (1,4,3,2)
    got = {p.one_line() for p in enumerate_filling(1, single_cycle=False)}
    assert got == oracle
    single = {p.one_line() for p in enumerate_filling(1, single_cycle=True)}
    assert single == oracle


def test_enumerate_n3_single_cycle_empty():
    assert enumerate_filling(3, single_cycle=True) == []


def test_enumerate_n3_general_solutions_are_genus_one():
    sols = enumerate_filling(3, single_cycle=False)
    assert sols
    from fillperm import validate

    for p in sols:
        fp = validate(p, 3)
        assert fp.genus() == 1 and fp.region_count == 3


def test_enumerate_n5_nonempty_and_valid():
    sols = enumerate_filling(5, single_cycle=True)
    assert len(sols) == 600
    for p in sols[::37]:
        assert is_valid(p, 5)
        assert p.num_cycles() == 1


def test_enumeration_closed_under_relabeling():
    sols = {p.one_line() for p in enumerate_filling(5, single_cycle=True)}
    for g in generators(5):
        for one in sols:
            assert Permutation(one).conjugated_by(g).one_line() in sols


def test_symmetry_reduced_meets_every_orbit():
    full = enumerate_filling(5, single_cycle=True)
    reduced = enumerate_filling(5, single_cycle=True, symmetry_reduced=True)
    assert len(reduced) < len(full)
    from fillperm import twist_group, validate

    group = twist_group(5).elements
    reduced_canon = {
        min(p.conjugated_by(t).one_line() for t in group) for p in reduced
    }
    full_canon = {min(p.conjugated_by(t).one_line() for t in group) for p in full}
    assert reduced_canon == full_canon


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        enumerate_filling(9, single_cycle=True)
    with pytest.raises(BoundExceeded):
        enumerate_filling(6, single_cycle=False)


def test_count_orbits_n1():
    total, records = count_orbits(1)
    assert total == 1
    assert len(records) == 1
    assert records[0].orbit_size_raw == 2
    assert records[0].genus == 1
    assert not records[0].decomposable


def test_count_orbits_n3():
    total, records = count_orbits(3)
    assert total == 0 and records == []


def test_count_orbits_requires_odd_n():
    with pytest.raises(ValueError):
        count_orbits(4)


def test_count_orbits_n5():
    total, records = count_orbits(5)
    assert 1 <= total <= upper_bound(3)
    assert total == 5
    assert sum(r.orbit_size_raw for r in records) == 600
    assert all(r.genus == 3 and r.c == 1 for r in records)
    # every genus-3 minimal pair splits off a genus-2 piece
    assert all(r.decomposable for r in records)


def test_census_records_nonminimal():
    total, records = census_records(2, single_cycle=False)
    assert total == sum(r.orbit_size_raw for r in records) == 8
    # one sphere pair (four regions) and one torus pair (two regions)
    assert [(r.c, r.genus, r.orbit_size_raw) for r in records] == [
        (4, 0, 4),
        (2, 1, 4),
    ]
    assert not any(r.decomposable for r in records)


def test_upper_bound_values():
    assert upper_bound(3) == 672
    assert upper_bound(4) == 84480
    with pytest.raises(ValueError):
        upper_bound(2)


def test_upper_bound_monotone():
    values = [upper_bound(g) for g in range(3, 12)]
    assert values == sorted(values)
    assert len(set(values)) == len(values)


def test_census_round_trip(tmp_path):
    _, records = count_orbits(5)
    path = tmp_path / "n5.census"
    write_census(records, path)
    assert read_census(path) == records
    lines = path.read_text().splitlines()
    assert len(lines) == len(records)
    # deterministic: records arrive sorted by canonical form
    forms = [r.canonical_form for r in records]
    assert forms == sorted(forms)


def test_census_canonical_forms_validate():
    _, records = count_orbits(5)
    for rec in records:
        assert is_valid(Permutation(rec.canonical_form), 5)
