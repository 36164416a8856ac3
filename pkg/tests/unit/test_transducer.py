"""
Testes Unitários - Módulo do Transdutor
"""

import random

import pytest

from src.core.errors import CapacityError, DomainError, InvalidBaseError
from src.core.numeral import MAX_WORD, DigitString, to_digits, to_nat
from src.core.transducer import (
    MAX_TABLE_ENTRIES,
    TransducerSpec,
    build,
    run,
    step,
)


class TestTransducerSpec:
    def test_valid_spec(self):
        spec = TransducerSpec(base=3, multiplier=10)
        assert spec.base == 3
        assert spec.multiplier == 10

    def test_invalid_base(self):
        with pytest.raises(InvalidBaseError):
            TransducerSpec(base=1, multiplier=4)

    def test_multiplier_one_rejected(self):
        with pytest.raises(DomainError, match="Multiplicador inválido"):
            TransducerSpec(base=3, multiplier=1)

    def test_multiply_by_accepts_unit(self):
        spec = TransducerSpec.multiply_by(1, 3)
        assert spec.multiplier == 1
        assert build(spec).transition_count == 3


class TestStep:
    def test_decimal_examples(self):
        spec = TransducerSpec(base=10, multiplier=6)
        record = step(0, 5, spec)
        assert (record.total, record.carry_out, record.write) == (30, 3, 0)

        record = step(3, 0, spec)
        assert (record.total, record.carry_out, record.write) == (3, 0, 3)

    def test_zero_step_absorbs(self):
        record = step(0, 0, TransducerSpec(base=7, multiplier=5))
        assert (record.total, record.carry_out, record.write) == (0, 0, 0)

    def test_base_three_example(self):
        record = step(0, 2, TransducerSpec(base=3, multiplier=4))
        assert (record.total, record.carry_out, record.write) == (8, 2, 2)

    def test_examples(self):
        spec = TransducerSpec(base=3, multiplier=10)
        record = step(0, 1, spec)
        assert (record.total, record.carry_out, record.write) == (10, 3, 1)

        record = step(3, 0, spec)
        assert (record.total, record.carry_out, record.write) == (3, 1, 0)

        record = step(1, 0, spec)
        assert (record.total, record.carry_out, record.write) == (1, 0, 1)

    def test_carry_out_of_range(self):
        with pytest.raises(DomainError, match="Carry"):
            step(10, 0, TransducerSpec(base=3, multiplier=10))

    def test_read_out_of_range(self):
        with pytest.raises(DomainError, match="Leitura"):
            step(0, 3, TransducerSpec(base=3, multiplier=10))

    def test_identity_exhaustive(self):
        for base in range(2, 17):
            for multiplier in range(2, 17):
                spec = TransducerSpec(base=base, multiplier=multiplier)
                for carry in range(multiplier):
                    for read in range(base):
                        record = step(carry, read, spec)
                        assert record.total == read * multiplier + carry
                        assert record.total == base * record.carry_out + record.write
                        assert 0 <= record.write < base
                        assert 0 <= record.carry_out < multiplier


class TestBuild:
    def test_table_size(self):
        transducer = build(TransducerSpec(base=3, multiplier=4))
        assert list(transducer.states) == [0, 1, 2, 3]
        assert transducer.transition_count == 12

    def test_smallest_spec(self):
        transducer = build(TransducerSpec(base=2, multiplier=2))
        assert len(transducer.states) == 2
        assert transducer.transition_count == 4

    def test_known_transitions(self):
        transducer = build(TransducerSpec(base=3, multiplier=4))
        assert transducer.lookup(0, 2) == (2, 2)

        transducer = build(TransducerSpec(base=3, multiplier=10))
        assert transducer.lookup(0, 1) == (3, 1)

    def test_deterministic(self):
        spec = TransducerSpec(base=7, multiplier=11)
        assert build(spec) == build(spec)

    def test_table_matches_step(self):
        spec = TransducerSpec(base=5, multiplier=9)
        transducer = build(spec)
        for transition in transducer.transitions():
            record = step(transition.carry_in, transition.read, spec)
            assert (transition.carry_out, transition.write) == (record.carry_out, record.write)

    def test_lookup_validates(self):
        transducer = build(TransducerSpec(base=3, multiplier=4))
        with pytest.raises(DomainError):
            transducer.lookup(4, 0)

    def test_graph_view_keeps_parallel_edges(self):
        transducer = build(TransducerSpec(base=3, multiplier=2))
        graph = transducer.to_graph()
        assert graph.number_of_nodes() == 2
        assert graph.number_of_edges() == 6
        labels = {(d["read"], d["write"]) for _, _, d in graph.edges(0, data=True)}
        assert labels == {(0, 0), (1, 2), (2, 1)}

    def test_transition_label(self):
        transducer = build(TransducerSpec(base=3, multiplier=4))
        labels = [t.label for t in transducer.transitions()]
        assert labels[:3] == ["(0,0)", "(1,1)", "(2,2)"]

    def test_capacity(self):
        with pytest.raises(CapacityError):
            build(TransducerSpec(base=2**40, multiplier=2**40))

    def test_table_size_cap(self):
        # produto cabe na palavra, mas a tabela não cabe na memória
        with pytest.raises(CapacityError, match="Tabela"):
            build(TransducerSpec(base=10, multiplier=10**9))
        with pytest.raises(CapacityError, match="Tabela"):
            build(TransducerSpec(base=2, multiplier=MAX_TABLE_ENTRIES // 2 + 1))


class TestRun:
    def test_multiply_example(self):
        transducer = build(TransducerSpec(base=3, multiplier=4))
        trace = run(transducer, to_digits(20, 3))
        assert trace.output.digits == (2, 2, 2, 2)
        assert to_nat(trace.output) == 80
        assert trace.carries == [0, 2, 0, 2, 0]
        assert trace.carries[0] == 0
        assert trace.carries[-1] == 0

    def test_zero_input(self):
        transducer = build(TransducerSpec(base=10, multiplier=7))
        trace = run(transducer, to_digits(0, 10))
        assert to_nat(trace.output) == 0
        assert len(trace.steps) == 1

    def test_drains_carry(self):
        transducer = build(TransducerSpec(base=10, multiplier=6))
        trace = run(transducer, to_digits(5, 10))
        assert [s.total for s in trace.steps] == [30, 3]
        assert trace.output.digits == (0, 3)

    def test_non_canonical_input(self):
        transducer = build(TransducerSpec(base=3, multiplier=4))
        trace = run(transducer, DigitString(3, (2, 0, 2, 0, 0)))
        assert to_nat(trace.output) == 80

    def test_base_mismatch(self):
        transducer = build(TransducerSpec(base=3, multiplier=4))
        with pytest.raises(DomainError, match="difere"):
            run(transducer, to_digits(20, 10))

    def test_product_capacity(self):
        transducer = build(TransducerSpec(base=2, multiplier=2))
        with pytest.raises(CapacityError):
            run(transducer, to_digits(MAX_WORD, 2))

    def test_trace_chains_carries(self):
        transducer = build(TransducerSpec(base=10, multiplier=37))
        trace = run(transducer, to_digits(98765, 10))
        for previous, current in zip(trace.steps, trace.steps[1:]):
            assert current.carry_in == previous.carry_out
        assert trace.carries[-1] == 0

    def test_random_products(self):
        rng = random.Random(2021)
        cache = {}
        for _ in range(10_000):
            base = rng.randint(2, 16)
            multiplier = rng.randint(2, 16)
            r = rng.randint(0, 5000)
            spec = TransducerSpec(base=base, multiplier=multiplier)
            if spec not in cache:
                cache[spec] = build(spec)
            trace = run(cache[spec], to_digits(r, base))
            assert to_nat(trace.output) == r * multiplier
            assert trace.output.is_canonical
