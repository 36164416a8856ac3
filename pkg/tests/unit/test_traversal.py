"""
Testes Unitários - Módulo de Travessia
"""

import pytest

from src.analysis.traversal import (
    Loop,
    compare_algorithms,
    enumerate_zero_loops,
    replay_loop,
    shortest_loop_in,
    shortest_zero_loop_bfs,
    shortest_zero_loop_dfs,
    validate_loop,
    zero_loop_graph,
)
from src.core.errors import DomainError
from src.core.transducer import Transducer, TransducerSpec, build


def make(multiplier, base):
    return build(TransducerSpec(base=base, multiplier=multiplier))


class TestShortestLoopExamples:
    @pytest.mark.parametrize("search", [shortest_zero_loop_bfs, shortest_zero_loop_dfs])
    def test_ten_times_in_base_three(self, search):
        loop = search(make(10, 3))
        assert loop.carries == (0, 3, 1, 0)
        assert loop.reads == (1, 0, 0)
        assert loop.writes == (1, 0, 1)
        assert loop.length == 4

    @pytest.mark.parametrize("search", [shortest_zero_loop_bfs, shortest_zero_loop_dfs])
    def test_four_times_in_base_three(self, search):
        loop = search(make(4, 3))
        assert loop.carries == (0, 1, 0)
        assert loop.reads == (1, 0)
        assert loop.writes == (1, 1)

    @pytest.mark.parametrize("search", [shortest_zero_loop_bfs, shortest_zero_loop_dfs])
    def test_multiplier_below_base(self, search):
        loop = search(make(2, 3))
        assert loop.carries == (0, 0)
        assert loop.reads == (1,)
        assert loop.writes == (2,)
        assert loop.length == 2

    @pytest.mark.parametrize("search", [shortest_zero_loop_bfs, shortest_zero_loop_dfs])
    def test_power_of_base(self, search):
        assert search(make(8, 2)).carries == (0, 4, 2, 1, 0)

    @pytest.mark.parametrize("search", [shortest_zero_loop_bfs, shortest_zero_loop_dfs])
    def test_smallest_transducer(self, search):
        assert search(make(2, 2)).carries == (0, 1, 0)


class TestAlgorithmsAgree:
    def test_grid(self):
        for base in range(2, 25):
            for multiplier in range(2, 25):
                transducer = make(multiplier, base)
                bfs = shortest_zero_loop_bfs(transducer)
                assert bfs == shortest_zero_loop_dfs(transducer), (multiplier, base)

    def test_comparison_record(self):
        comparison = compare_algorithms(make(10, 3))
        assert comparison.agree
        assert comparison.bfs.carries == (0, 3, 1, 0)
        assert comparison.bfs_seconds >= 0
        assert comparison.dfs_seconds >= 0


class TestLoopProperties:
    def test_loops_are_valid_and_replayable(self):
        for base in range(2, 13):
            for multiplier in range(2, 30):
                transducer = make(multiplier, base)
                loop = shortest_zero_loop_bfs(transducer)
                validate_loop(transducer, loop)
                assert replay_loop(transducer, loop.reads) == loop
                assert loop.carries[0] == loop.carries[-1] == 0
                assert len(set(loop.interior)) == len(loop.interior)
                assert any(loop.reads)

    def test_exhaustive_minimality(self):
        max_steps = 5
        longest = 0
        for base in range(2, 13):
            for multiplier in range(2, 13):
                transducer = make(multiplier, base)
                shortest = shortest_zero_loop_bfs(transducer)
                longest = max(longest, shortest.steps)
                loops = enumerate_zero_loops(transducer, max_steps=max_steps)
                assert loops, (multiplier, base)
                assert loops[0] == shortest, (multiplier, base)
        # o limite da enumeração fica acima de todo laço mínimo da grade
        assert longest == 4
        assert longest < max_steps

    def test_enumeration_respects_bound(self):
        transducer = make(4, 3)
        loops = enumerate_zero_loops(transducer, max_steps=2)
        assert Loop((0, 1, 0), (1, 0), (1, 1)) in loops
        assert all(loop.steps <= 2 for loop in loops)
        assert loops == sorted(loops, key=Loop.sort_key)

    def test_enumeration_can_be_empty(self):
        assert enumerate_zero_loops(make(2, 2), max_steps=1) == []
        assert enumerate_zero_loops(make(10, 3), max_steps=0) == []

    def test_enumeration_keeps_parallel_edges(self):
        # 2 < 5: toda leitura de 1 a 2 a partir de 0 volta direto a 0
        loops = enumerate_zero_loops(make(2, 5), max_steps=1)
        assert [loop.reads for loop in loops] == [(1,), (2,)]

    def test_enumeration_walks_graph_view(self, mocker):
        spy = mocker.spy(Transducer, "to_graph")
        transducer = make(10, 3)
        loops = enumerate_zero_loops(transducer, max_steps=3)
        spy.assert_called_once_with(transducer)
        assert loops[0] == shortest_zero_loop_bfs(transducer)


class TestValidateLoop:
    def test_rejects_wrong_transition(self):
        with pytest.raises(DomainError, match="não é transição"):
            validate_loop(make(10, 3), Loop((0, 3, 1, 0), (1, 0, 0), (1, 0, 2)))

    def test_rejects_trivial_loop(self):
        with pytest.raises(DomainError, match="trivial"):
            validate_loop(make(10, 3), Loop((0, 0), (0,), (0,)))

    def test_rejects_open_walk(self):
        with pytest.raises(DomainError, match="estado 0"):
            validate_loop(make(10, 3), Loop((0, 3, 1), (1, 0), (1, 0)))

    def test_rejects_malformed(self):
        with pytest.raises(DomainError, match="malformado"):
            validate_loop(make(10, 3), Loop((0, 3, 1, 0), (1, 0), (1, 0)))


class TestRestrictedGraph:
    def test_digit_filter_drops_edges(self):
        transducer = make(5, 3)
        graph = zero_loop_graph(transducer, digits=[0, 1])
        assert shortest_loop_in(graph) is None

    def test_digit_filter_keeps_valid_loop(self):
        transducer = make(4, 3)
        loop = shortest_loop_in(zero_loop_graph(transducer, digits=[0, 1]))
        assert loop.carries == (0, 1, 0)
        assert set(loop.reads) | set(loop.writes) <= {0, 1}
