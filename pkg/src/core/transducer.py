"""
Módulo do Transdutor de Multiplicação
=====================================

Constrói o transdutor T_{m,b} (estados = carries 0..m-1, arestas
rotuladas (leitura, escrita)) e executa a multiplicação em base b como
uma sequência de passos do transdutor.

Cada passo satisfaz simultaneamente::

    t = r*m + c = b*c' + w,   c' = t // b,   w = t % b

A tabela de transições é densa, indexada por (carry, leitura): a função
é total, então são exatamente m*b entradas e o custo de construção é
O(m*b).

Autor: [Seu Nome]
"""

from dataclasses import dataclass, field
from typing import Iterator

import networkx as nx
import structlog

from .errors import CapacityError, DomainError, InvalidBaseError
from .numeral import MAX_WORD, DigitString, to_nat

logger = structlog.get_logger(__name__)

# maior tabela aceita por build (b * m entradas); cobre a grade 2000 x 2000
MAX_TABLE_ENTRIES = 2**22


@dataclass(frozen=True)
class TransducerSpec:
    """Parâmetros de T_{m,b}: base b e multiplicador m (ambos > 1)."""

    base: int
    multiplier: int
    allow_unit: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.base < 2:
            raise InvalidBaseError(f"Base inválida: {self.base} (mínimo 2)")
        minimum = 1 if self.allow_unit else 2
        if self.multiplier < minimum:
            raise DomainError(
                f"Multiplicador inválido: {self.multiplier} (mínimo {minimum})"
            )

    @classmethod
    def multiply_by(cls, n: int, base: int) -> "TransducerSpec":
        """Spec que aceita n = 1, usada nas consultas de quociente."""
        return cls(base=base, multiplier=n, allow_unit=True)


@dataclass(frozen=True)
class StepRecord:
    """Um passo: carry de entrada, leitura, total, escrita e carry de saída."""

    carry_in: int
    read: int
    total: int
    write: int
    carry_out: int


@dataclass(frozen=True)
class Transition:
    """Aresta carry_in -> carry_out rotulada (read, write)."""

    carry_in: int
    read: int
    write: int
    carry_out: int

    @property
    def label(self) -> str:
        return f"({self.read},{self.write})"


@dataclass(frozen=True)
class Transducer:
    """
    Transdutor T_{m,b} imutável.

    ``table[c][r]`` guarda o par (carry_out, write) da transição que sai do
    estado c lendo r.
    """

    spec: TransducerSpec
    table: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def base(self) -> int:
        return self.spec.base

    @property
    def multiplier(self) -> int:
        return self.spec.multiplier

    @property
    def states(self) -> range:
        return range(self.spec.multiplier)

    @property
    def transition_count(self) -> int:
        return sum(len(row) for row in self.table)

    def lookup(self, carry: int, read: int) -> tuple[int, int]:
        """Retorna (carry_out, write) para o par (carry, read)."""
        _check_step_domain(carry, read, self.spec)
        return self.table[carry][read]

    def transitions(self) -> Iterator[Transition]:
        """Itera as transições na ordem (carry, leitura)."""
        for carry, row in enumerate(self.table):
            for read, (carry_out, write) in enumerate(row):
                yield Transition(carry, read, write, carry_out)

    def to_graph(self) -> nx.MultiDiGraph:
        """
        Visão networkx do transdutor.

        Arestas paralelas (mesmo par de carries, rótulos diferentes) são
        preservadas como arestas distintas.
        """
        graph = nx.MultiDiGraph(base=self.base, multiplier=self.multiplier)
        graph.add_nodes_from(self.states)
        graph.add_edges_from(
            (t.carry_in, t.carry_out, {"read": t.read, "write": t.write})
            for t in self.transitions()
        )
        return graph


@dataclass(frozen=True)
class MultiplicationTrace:
    """Execução completa de r * m: passos e numeral de saída."""

    spec: TransducerSpec
    input: DigitString
    steps: tuple[StepRecord, ...]
    output: DigitString

    @property
    def carries(self) -> list[int]:
        """Sequência de carries visitados, começando e terminando em 0."""
        return [self.steps[0].carry_in] + [s.carry_out for s in self.steps]


def _check_step_domain(carry: int, read: int, spec: TransducerSpec) -> None:
    if not 0 <= carry < spec.multiplier:
        raise DomainError(
            f"Carry {carry} fora do intervalo 0..{spec.multiplier - 1}"
        )
    if not 0 <= read < spec.base:
        raise DomainError(f"Leitura {read} fora do intervalo 0..{spec.base - 1}")


def step(carry: int, read: int, spec: TransducerSpec) -> StepRecord:
    """
    Executa um passo de multiplicação.

    Args:
        carry: Carry de entrada (0..m-1)
        read: Dígito lido (0..b-1)
        spec: Parâmetros do transdutor

    Returns:
        StepRecord com t = r*m + c, c' = t // b e w = t % b
    """
    _check_step_domain(carry, read, spec)
    total = read * spec.multiplier + carry
    carry_out, write = divmod(total, spec.base)
    return StepRecord(carry, read, total, write, carry_out)


def build(spec: TransducerSpec) -> Transducer:
    """
    Constrói a tabela total de transições de T_{m,b}.

    Specs iguais produzem tabelas idênticas.
    """
    # maior total possível: (b-1)*m + (m-1) = b*m - 1
    if spec.base * spec.multiplier - 1 > MAX_WORD:
        raise CapacityError(
            f"Total máximo de T_{{{spec.multiplier},{spec.base}}} excede "
            f"a palavra de 64 bits"
        )
    if spec.base * spec.multiplier > MAX_TABLE_ENTRIES:
        raise CapacityError(
            f"Tabela de T_{{{spec.multiplier},{spec.base}}} teria "
            f"{spec.base * spec.multiplier} entradas (limite {MAX_TABLE_ENTRIES})"
        )

    base, multiplier = spec.base, spec.multiplier
    table = tuple(
        tuple(divmod(read * multiplier + carry, base) for read in range(base))
        for carry in range(multiplier)
    )

    logger.debug(
        "Transdutor construído",
        base=base,
        multiplier=multiplier,
        transitions=base * multiplier,
    )
    return Transducer(spec=spec, table=table)


def run(transducer: Transducer, r: DigitString) -> MultiplicationTrace:
    """
    Multiplica r pelo multiplicador do transdutor.

    Consome os dígitos do menos significativo para o mais significativo;
    esgotada a leitura, lê zeros até o carry voltar a 0.
    """
    spec = transducer.spec
    if r.base != spec.base:
        raise DomainError(
            f"Base do numeral ({r.base}) difere da base do transdutor ({spec.base})"
        )

    r = r.normalized()
    if to_nat(r) * spec.multiplier > MAX_WORD:
        raise CapacityError(
            f"Produto de {r} por {spec.multiplier} excede a palavra de 64 bits"
        )

    steps = []
    carry = 0
    position = 0
    while position < r.length or carry != 0:
        read = r.digits[position] if position < r.length else 0
        carry_out, write = transducer.table[carry][read]
        steps.append(
            StepRecord(carry, read, read * spec.multiplier + carry, write, carry_out)
        )
        carry = carry_out
        position += 1

    output = DigitString(spec.base, tuple(s.write for s in steps))

    logger.debug(
        "Multiplicação executada",
        base=spec.base,
        multiplier=spec.multiplier,
        steps=len(steps),
    )
    return MultiplicationTrace(spec=spec, input=r, steps=tuple(steps), output=output)
