"""
Analysis Module - Travessias, leis do menor laço e conjuntos quociente
======================================================================

Uso básico:
    >>> from src.core import TransducerSpec, build
    >>> from src.analysis import shortest_zero_loop_bfs, check_cell
    >>>
    >>> transducer = build(TransducerSpec(base=3, multiplier=10))
    >>> shortest_zero_loop_bfs(transducer).carries
    (0, 3, 1, 0)
    >>> check_cell(TransducerSpec(base=3, multiplier=10)).conjecture1_match
    True

Autor: [Seu Nome]
"""

from .traversal import (
    AlgorithmComparison,
    Loop,
    compare_algorithms,
    enumerate_zero_loops,
    replay_loop,
    shortest_loop_in,
    shortest_zero_loop_bfs,
    shortest_zero_loop_dfs,
    validate_loop,
    zero_loop_graph
)

from .laws import (
    CellReport,
    SweepSummary,
    check_cell,
    integer_log,
    integer_root,
    length_census,
    multiplier_range_for_length,
    predicted_carries,
    predicted_loop_length,
    printed_formula_disagreements,
    printed_formula_length,
    summarize,
    sweep
)

from .quotient import (
    DigitSet,
    MembershipResult,
    is_in_s,
    iter_s_members,
    oracle_member,
    quotient_batch,
    quotient_member,
    s_members
)

__all__ = [
    # Travessia
    'Loop',
    'AlgorithmComparison',
    'shortest_zero_loop_bfs',
    'shortest_zero_loop_dfs',
    'enumerate_zero_loops',
    'compare_algorithms',
    'replay_loop',
    'validate_loop',
    'zero_loop_graph',
    'shortest_loop_in',

    # Leis
    'CellReport',
    'SweepSummary',
    'predicted_carries',
    'predicted_loop_length',
    'printed_formula_length',
    'multiplier_range_for_length',
    'check_cell',
    'sweep',
    'summarize',
    'printed_formula_disagreements',
    'length_census',
    'integer_log',
    'integer_root',

    # Quocientes
    'DigitSet',
    'MembershipResult',
    's_members',
    'iter_s_members',
    'is_in_s',
    'quotient_member',
    'oracle_member',
    'quotient_batch'
]
