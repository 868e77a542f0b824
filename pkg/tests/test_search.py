import pytest

from src.data.catalog import P0, Q
from src.errors import RankError
from src.groups.grammar import parse_word
from src.presentations.moves import Automorph, Conjugate, Invert, Mult, apply_move, apply_script
from src.presentations.presentation import Presentation
from src.presentations.search import (
    SearchBounds,
    bounded_search,
    canonical_key,
    candidate_moves,
    explore,
    finish_script,
)


def test_start_equals_goal():
    assert bounded_search(P0, P0) == []


def test_single_inversion():
    goal = apply_move(P0, Invert(1))
    assert bounded_search(P0, goal, SearchBounds(max_moves=2, max_conjugator_len=1)) == [Invert(1)]


def test_conjugation_is_finished_directly():
    goal = apply_move(Q, Conjugate(2, parse_word("xy^-1x")))
    script = bounded_search(Q, goal, SearchBounds(max_moves=1, max_conjugator_len=1))
    assert script == [Conjugate(2, parse_word("xy^-1x"))]


def test_hidden_script_is_recovered():
    hidden = [Mult(2, 1), Conjugate(2, parse_word("xy^-1")), Invert(1)]
    goal = apply_script(P0, hidden)
    script = bounded_search(P0, goal, SearchBounds(max_moves=3, max_conjugator_len=2))
    assert script is not None
    assert len(script) <= len(hidden)
    assert apply_script(P0, script) == goal


def test_candidate_order():
    moves = list(candidate_moves(P0, SearchBounds(max_conjugator_len=1)))
    assert moves[:4] == [Mult(1, 2), Mult(2, 1), Invert(1), Invert(2)]
    assert moves[4] == Conjugate(1, parse_word("x"))
    # the empty relator is never conjugated
    assert all(not (isinstance(m, Conjugate) and m.j == 2) for m in moves)
    assert all(isinstance(m, Automorph) for m in moves[-4:])
    assert len(moves) == 12


def test_candidates_without_automorphisms():
    moves = list(candidate_moves(P0, SearchBounds(max_conjugator_len=1, automorphisms=False)))
    assert not any(isinstance(m, Automorph) for m in moves)


def test_finish_script():
    g = parse_word("y^-1")
    goal = apply_move(P0, Conjugate(1, g))
    tail = finish_script(P0, goal)
    assert len(tail) == 1 and isinstance(tail[0], Conjugate)
    assert apply_script(P0, tail) == goal
    assert finish_script(P0, P0) == []
    assert finish_script(P0, apply_move(P0, Invert(1))) is None
    assert finish_script(P0, Q) is None


def test_canonical_key_forgets_conjugation_and_order():
    g = parse_word("xy^-1")
    assert canonical_key(apply_move(P0, Conjugate(1, g))) == canonical_key(P0)
    swapped = Presentation.rank2([Q.relator(2), Q.relator(1)])
    assert canonical_key(swapped) == canonical_key(Q)
    assert canonical_key(apply_move(P0, Invert(1))) != canonical_key(P0)


def test_conjugator_bound_does_not_change_the_explored_states():
    short = explore(P0, Q, SearchBounds(max_moves=3, max_conjugator_len=1))
    long = explore(P0, Q, SearchBounds(max_moves=3, max_conjugator_len=2))
    assert short.stats().equals(long.stats())


def test_relator_count_mismatch():
    report = explore(P0, Presentation.rank2([parse_word("[x,y]")]))
    assert report.script is None
    assert report.exhausted


def test_search_needs_rank_two():
    with pytest.raises(RankError):
        bounded_search(Presentation(3, ()), Presentation(3, ()))


def test_trivial_presentation_does_not_reach_q_within_small_bounds():
    report = explore(P0, Q, SearchBounds(max_moves=3, max_conjugator_len=1))
    assert report.script is None
    assert report.exhausted
    stats = report.stats()
    assert list(stats.columns) == ["depth", "frontier", "new_states", "pruned"]
    assert len(stats) >= 1
    assert report.states_seen > 1


def test_relator_length_bound_prunes():
    report = explore(P0, Q, SearchBounds(max_moves=2, max_conjugator_len=2, max_relator_len=4))
    assert report.script is None
    assert report.stats()["pruned"].sum() > 0


def test_trivial_presentation_does_not_reach_q_at_depth_four():
    assert bounded_search(P0, Q, SearchBounds(max_moves=4, max_conjugator_len=1)) is None


@pytest.mark.slow
def test_trivial_presentation_does_not_reach_q_at_full_bounds():
    report = explore(P0, Q, SearchBounds(max_moves=6, max_conjugator_len=2))
    assert report.script is None
    assert report.exhausted
    assert len(report.stats()) >= 1
