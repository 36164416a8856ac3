"""
Módulo de Leis do Menor Laço
============================

Previsões fechadas para o menor laço em 0 de T_{m,b} e o harness de
varredura que as compara com o laço medido pelas travessias.

Previsões:

- carries pela recorrência c_0 = 0, c_1 = m // b, c_i = c_{i-1} // b;
- leitura [1, 0, ..., 0] e escrita com valor m;
- comprimento floor(log_b m) + 2 (forma logarítmica, a que é testada);
- comprimento floor(m ** (1/b)) + 2 (forma impressa, apenas reportada).

Toda aritmética de log e raiz é inteira, sem ponto flutuante.

Autor: [Seu Nome]
"""

from collections import Counter
from dataclasses import dataclass, field
from multiprocessing.context import BaseContext
from typing import Iterable, Optional

import structlog

from ..core.errors import CapacityError, DomainError, VerificationError
from ..core.log import process_pool
from ..core.numeral import DigitString, to_nat
from ..core.transducer import TransducerSpec, build
from .traversal import shortest_zero_loop_bfs, shortest_zero_loop_dfs

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class CellReport:
    """Veredito de verificação de uma célula (b, m)."""

    b: int
    m: int
    measured_length: int
    measured_carries: tuple[int, ...]
    conjecture1_match: bool
    reads_are_unit: bool
    write_value_is_m: bool
    log_formula_length: int
    log_formula_match: bool
    printed_formula_length: int
    printed_formula_match: bool


@dataclass
class SweepSummary:
    """Contagens agregadas de uma varredura."""

    cells: int = 0
    conjecture1_mismatches: int = 0
    unit_read_mismatches: int = 0
    write_value_mismatches: int = 0
    log_formula_mismatches: int = 0
    printed_formula_disagreements: list = field(default_factory=list)

    @property
    def all_verified(self) -> bool:
        return not (
            self.conjecture1_mismatches
            or self.unit_read_mismatches
            or self.write_value_mismatches
            or self.log_formula_mismatches
        )


# =============================================================================
# Aritmética inteira exata
# =============================================================================
def integer_log(value: int, base: int) -> int:
    """floor(log_base value) por divisões sucessivas (value >= 1)."""
    if value < 1:
        raise DomainError(f"Logaritmo indefinido para {value}")
    exponent = 0
    while value >= base:
        value //= base
        exponent += 1
    return exponent


def integer_root(value: int, degree: int) -> int:
    """Maior k com k**degree <= value, por busca binária."""
    if value < 0 or degree < 1:
        raise DomainError(f"Raiz indefinida: {value} ** (1/{degree})")
    if value < 2 ** degree:
        return min(value, 1)
    low, high = 0, value
    while low < high:
        middle = (low + high + 1) // 2
        if middle ** degree <= value:
            low = middle
        else:
            high = middle - 1
    return low


# =============================================================================
# Previsões
# =============================================================================
def predicted_carries(spec: TransducerSpec) -> list[int]:
    """Recorrência 0, m // b, c // b, ... até o primeiro 0 (inclusive)."""
    carries = [0, spec.multiplier // spec.base]
    while carries[-1] != 0:
        carries.append(carries[-1] // spec.base)
    return carries


def predicted_loop_length(spec: TransducerSpec) -> int:
    """Comprimento floor(log_b m) + 2, contando os dois zeros das pontas."""
    return integer_log(spec.multiplier, spec.base) + 2


def printed_formula_length(spec: TransducerSpec) -> int:
    """floor(m ** (1/b)) + 2, mantido apenas para reportar divergências."""
    return integer_root(spec.multiplier, spec.base) + 2


def multiplier_range_for_length(b: int, n: int) -> tuple[int, int, int]:
    """
    Faixa de multiplicadores cujo menor laço tem comprimento n + 1.

    Returns:
        (lo, hi, count) com lo = b**(n-1), hi = b**n - 1 e
        count = b**(n-1) * (b-1)
    """
    if b < 2:
        raise DomainError(f"Base inválida: {b} (mínimo 2)")
    if n < 3:
        raise DomainError(f"Faixa definida apenas para n >= 3 (recebido {n})")
    low = b ** (n - 1)
    high = b ** n - 1
    return low, high, low * (b - 1)


# =============================================================================
# Verificação de células
# =============================================================================
def check_cell(spec: TransducerSpec) -> CellReport:
    """
    Mede o menor laço de T_{m,b} com BFS e DFS e confronta as previsões.

    Raises:
        VerificationError: se BFS e DFS retornarem laços diferentes
    """
    transducer = build(spec)
    loop = shortest_zero_loop_bfs(transducer)
    other = shortest_zero_loop_dfs(transducer)
    if loop != other:
        logger.error(
            "BFS e DFS divergem",
            base=spec.base,
            multiplier=spec.multiplier,
            bfs=loop.carries,
            dfs=other.carries,
        )
        raise VerificationError(
            f"BFS {loop.carries} e DFS {other.carries} divergem em "
            f"(b={spec.base}, m={spec.multiplier})"
        )

    log_length = predicted_loop_length(spec)
    printed_length = printed_formula_length(spec)
    write_value = to_nat(DigitString(spec.base, loop.writes))

    return CellReport(
        b=spec.base,
        m=spec.multiplier,
        measured_length=loop.length,
        measured_carries=loop.carries,
        conjecture1_match=list(loop.carries) == predicted_carries(spec),
        reads_are_unit=loop.reads[0] == 1 and not any(loop.reads[1:]),
        write_value_is_m=write_value == spec.multiplier,
        log_formula_length=log_length,
        log_formula_match=log_length == loop.length,
        printed_formula_length=printed_length,
        printed_formula_match=printed_length == loop.length,
    )


def _check_cell_at(cell: tuple[int, int]) -> CellReport:
    base, multiplier = cell
    try:
        return check_cell(TransducerSpec(base=base, multiplier=multiplier))
    except CapacityError as e:
        raise CapacityError(f"Célula (b={base}, m={multiplier}): {e}") from e


def _map_cells(
    cells: list[tuple[int, int]],
    workers: int,
    mp_context: Optional[BaseContext] = None
) -> list[CellReport]:
    if workers <= 1 or len(cells) < 2:
        return [_check_cell_at(cell) for cell in cells]
    chunksize = max(1, len(cells) // (workers * 8))
    with process_pool(workers, mp_context) as executor:
        # map preserva a ordem de entrada
        return list(executor.map(_check_cell_at, cells, chunksize=chunksize))


def sweep(
    b_max: int,
    m_max: int,
    workers: int = 1,
    mp_context: Optional[BaseContext] = None
) -> list[CellReport]:
    """
    Verifica todas as células (b, m) em [2, b_max] x [2, m_max].

    A saída é ordenada por (b, m) e idêntica para qualquer número de
    workers.
    """
    if b_max < 2 or m_max < 2:
        raise DomainError(f"Limites inválidos: b_max={b_max}, m_max={m_max} (mínimo 2)")
    if workers < 1:
        raise DomainError(f"Número de workers inválido: {workers}")

    cells = [(b, m) for b in range(2, b_max + 1) for m in range(2, m_max + 1)]
    logger.info("Varredura iniciada", cells=len(cells), workers=workers)

    reports = _map_cells(cells, workers, mp_context)

    summary = summarize(reports)
    logger.info(
        "Varredura concluída",
        cells=summary.cells,
        all_verified=summary.all_verified,
        printed_formula_disagreements=len(summary.printed_formula_disagreements),
    )
    return reports


def printed_formula_disagreements(reports: Iterable[CellReport]) -> list[tuple[int, int]]:
    """Células em que a forma impressa do comprimento diverge da medida."""
    return [(r.b, r.m) for r in reports if not r.printed_formula_match]


def summarize(reports: Iterable[CellReport]) -> SweepSummary:
    summary = SweepSummary()
    for report in reports:
        summary.cells += 1
        summary.conjecture1_mismatches += not report.conjecture1_match
        summary.unit_read_mismatches += not report.reads_are_unit
        summary.write_value_mismatches += not report.write_value_is_m
        summary.log_formula_mismatches += not report.log_formula_match
        if not report.printed_formula_match:
            summary.printed_formula_disagreements.append((report.b, report.m))
    return summary


def length_census(
    b: int,
    m_max: int,
    workers: int = 1,
    mp_context: Optional[BaseContext] = None
) -> dict[int, int]:
    """
    Quantos multiplicadores 2..m_max têm cada comprimento de laço medido.

    Permite conferir a contagem b**(n-1) * (b-1) de
    ``multiplier_range_for_length`` contra a medição.
    """
    if m_max < 2:
        raise DomainError(f"m_max inválido: {m_max} (mínimo 2)")
    cells = [(b, m) for m in range(2, m_max + 1)]
    reports = _map_cells(cells, workers, mp_context)
    return dict(sorted(Counter(r.measured_length for r in reports).items()))
