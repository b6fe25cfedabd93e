import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legfam.errors import BudgetExceededError
from legfam.fcomplexity import family_complexity, satisfies_spec
from legfam.gf import PolyModP
from legfam.legendre_seq import LegendreSequence, SequenceFamily, build_family


def _fake_family(p: int, rows: list[tuple[int, ...]]) -> SequenceFamily:
    # wrap raw +-1 rows; the source polynomial is a placeholder
    dummy = PolyModP(p, (0, 1))
    return SequenceFamily(
        p, 1, tuple(LegendreSequence(p, row, dummy) for row in rows)
    )


def test_empty_family_has_gamma_zero():
    fam = _fake_family(5, [])
    res = family_complexity(fam)
    assert res.gamma == 0
    assert res.witness_failure is not None


def test_single_sequence_realizes_only_its_own_signs():
    fam = _fake_family(5, [(1, 1, 1, 1, 1)])
    res = family_complexity(fam)
    assert res.gamma == 0
    positions, signs = res.witness_failure
    assert positions == (1,)
    assert signs == (-1,)


def test_full_pattern_family_reaches_length():
    # all 8 sign rows of length 3: every pattern at every level is realized
    rows = list(itertools.product((-1, 1), repeat=3))
    fam = _fake_family(3, rows)
    res = family_complexity(fam)
    assert res.gamma == 3
    assert res.witness_failure is None


def test_family_3_2_gamma_and_witness():
    res = family_complexity(build_family(3, 2))
    assert res.gamma == 1
    assert res.witness_failure == ((1, 2), (1, 1))
    assert res.cells_examined > 0


def test_known_small_gammas():
    want = {
        (3, 1): 1, (5, 1): 1, (7, 1): 2, (11, 1): 2, (13, 1): 2,
        (3, 2): 1, (5, 2): 2, (7, 2): 2, (11, 2): 3, (13, 2): 4,
    }
    for (p, k), gamma in want.items():
        assert family_complexity(build_family(p, k)).gamma == gamma, (p, k)


def test_trivial_upper_bound_respected():
    for p, k in ((3, 2), (5, 2), (7, 2), (11, 2)):
        fam = build_family(p, k)
        res = family_complexity(fam)
        assert 2 ** res.gamma <= len(fam.members)


def test_witness_is_lexicographically_first():
    # two rows, length 4: level 2 fails; the witness must be the first
    # position pair in lex order whose pattern set is incomplete
    fam = _fake_family(5, [(1, 1, 1, 1, 1), (-1, -1, -1, -1, -1)])
    res = family_complexity(fam)
    assert res.gamma == 1
    positions, signs = res.witness_failure
    assert positions == (1, 2)
    assert signs == (-1, 1)  # smallest missing pattern integer, MSB first


def test_satisfies_spec_basic():
    fam = build_family(3, 2)
    assert satisfies_spec(fam, (1, 2), (-1, -1))
    assert satisfies_spec(fam, (1, 2), (-1, 1))
    assert satisfies_spec(fam, (1, 2), (1, -1))
    assert not satisfies_spec(fam, (1, 2), (1, 1))
    assert satisfies_spec(fam, (), ())  # vacuous


def test_satisfies_spec_validates():
    fam = build_family(3, 2)
    with pytest.raises(ValueError):
        satisfies_spec(fam, (2, 1), (1, 1))  # not increasing
    with pytest.raises(ValueError):
        satisfies_spec(fam, (1, 4), (1, 1))  # beyond p
    with pytest.raises(ValueError):
        satisfies_spec(fam, (0, 1), (1, 1))  # positions are 1-based
    with pytest.raises(ValueError):
        satisfies_spec(fam, (1, 2), (1, 0))
    with pytest.raises(ValueError):
        satisfies_spec(fam, (1, 2), (1,))


def test_gamma_consistent_with_satisfies_spec():
    fam = build_family(5, 2)
    res = family_complexity(fam)
    j = res.gamma
    for positions in itertools.combinations(range(1, 6), j):
        for signs in itertools.product((-1, 1), repeat=j):
            assert satisfies_spec(fam, positions, signs)
    positions, signs = res.witness_failure
    assert not satisfies_spec(fam, positions, signs)


def test_j_cap_stops_early():
    rows = list(itertools.product((-1, 1), repeat=3))
    fam = _fake_family(3, rows)
    res = family_complexity(fam, j_cap=2)
    assert res.gamma == 2
    assert res.witness_failure is None


def test_budget_error_names_first_unverified_level():
    fam = build_family(13, 2)
    with pytest.raises(BudgetExceededError) as exc:
        family_complexity(fam, cell_budget=50)
    assert "j=1" in str(exc.value)


def test_budget_error_partial_progress_level():
    fam = build_family(13, 2)
    # enough for level 1 (13 tuples * 84 members * 1 = 1092) but not level 2
    with pytest.raises(BudgetExceededError) as exc:
        family_complexity(fam, cell_budget=2_000)
    assert "j=2" in str(exc.value)


@given(st.integers(0, 2 ** 5 - 1))
@settings(max_examples=40, deadline=None)
def test_gamma_monotone_under_member_removal(mask):
    fam = build_family(5, 2)
    kept = tuple(m for i, m in enumerate(fam.members) if not (mask >> i) & 1)
    sub = SequenceFamily(5, 2, kept)
    full = family_complexity(fam).gamma
    assert family_complexity(sub).gamma <= full


def test_cells_examined_counts_match_hand_computation():
    fam = build_family(3, 2)
    res = family_complexity(fam)
    # level 1: 3 tuples * 3 members; level 2: first tuple fails after 3*2
    assert res.cells_examined == 9 + 6
