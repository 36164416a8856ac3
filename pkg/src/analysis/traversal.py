"""
Módulo de Travessia
===================

Encontra o menor laço fechado de carries que começa e termina no estado 0
por dois algoritmos independentes:

- ``shortest_zero_loop_bfs``: distâncias BFS (networkx) até o estado 0 e
  reconstrução gulosa do laço.
- ``shortest_zero_loop_dfs``: busca em profundidade com poda pelo melhor
  laço já encontrado.

``enumerate_zero_loops`` lista exaustivamente todos os laços até um
limite de passos e serve de oráculo de minimalidade.

Um laço é não trivial quando a palavra lida tem algum dígito diferente de
zero; isso exclui o auto-laço (0, 0) no estado 0 e admite o laço [0, 0]
lendo 1 quando m < b. Entre laços de comprimento mínimo o desempate é a
menor sequência de carries (lexicográfica) e, depois, a menor palavra
lida.

Autor: [Seu Nome]
"""

import time
from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx
import structlog

from ..core.errors import DomainError, VerificationError
from ..core.transducer import Transducer

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Loop:
    """Caminhada fechada de carries 0 -> ... -> 0 com palavras lida e escrita."""

    carries: tuple[int, ...]
    reads: tuple[int, ...]
    writes: tuple[int, ...]

    @property
    def length(self) -> int:
        """Número de entradas de carry (passos + 1)."""
        return len(self.carries)

    @property
    def steps(self) -> int:
        return len(self.reads)

    @property
    def interior(self) -> tuple[int, ...]:
        return self.carries[1:-1]

    def sort_key(self) -> tuple:
        return (self.length, self.carries, self.reads)


@dataclass(frozen=True)
class AlgorithmComparison:
    """Resultado de BFS e DFS lado a lado, com tempo de parede de cada um."""

    bfs: Loop
    dfs: Loop
    bfs_seconds: float
    dfs_seconds: float

    @property
    def agree(self) -> bool:
        return self.bfs == self.dfs


def replay_loop(transducer: Transducer, reads: Iterable[int]) -> Loop:
    """Executa uma palavra de leitura a partir do carry 0."""
    reads = tuple(reads)
    carries = [0]
    writes = []
    for read in reads:
        carry_out, write = transducer.lookup(carries[-1], read)
        carries.append(carry_out)
        writes.append(write)
    return Loop(tuple(carries), reads, tuple(writes))


def validate_loop(transducer: Transducer, loop: Loop) -> None:
    """Levanta DomainError se o laço não for um laço válido de T."""
    name = f"T_{{{transducer.multiplier},{transducer.base}}}"
    if loop.length < 2 or len(loop.reads) != loop.length - 1 or len(loop.writes) != len(loop.reads):
        raise DomainError(f"Laço malformado para {name}: {loop}")
    if loop.carries[0] != 0 or loop.carries[-1] != 0:
        raise DomainError(f"Laço não começa e termina no estado 0: {loop.carries}")
    if not any(loop.reads):
        raise DomainError("Laço trivial: a palavra lida é toda zero")
    interior = loop.interior
    if 0 in interior or len(set(interior)) != len(interior):
        raise DomainError(f"Carries interiores repetidos: {loop.carries}")

    for index, (read, write) in enumerate(zip(loop.reads, loop.writes)):
        carry, expected = loop.carries[index], loop.carries[index + 1]
        if not 0 <= carry < transducer.multiplier or not 0 <= read < transducer.base:
            raise DomainError(f"Passo {index} fora do domínio de {name}")
        if transducer.table[carry][read] != (expected, write):
            raise DomainError(
                f"Passo {index} ({carry} -({read},{write})-> {expected}) "
                f"não é transição de {name}"
            )


# =============================================================================
# BFS (networkx)
# =============================================================================
def zero_loop_graph(
    transducer: Transducer,
    digits: Optional[Iterable[int]] = None
) -> nx.DiGraph:
    """
    Esqueleto de carries usado pela busca BFS.

    Uma aresta por par (carry, carry_out), rotulada com a menor leitura
    admissível. O auto-laço (0, 0) lendo 0 é omitido. Com ``digits``,
    só restam transições cuja leitura e escrita pertencem ao conjunto.
    """
    allowed = None if digits is None else frozenset(digits)
    graph = nx.DiGraph(base=transducer.base, multiplier=transducer.multiplier)
    graph.add_nodes_from(transducer.states)

    for carry, row in enumerate(transducer.table):
        for read, (carry_out, write) in enumerate(row):
            if carry == 0 and read == 0:
                continue
            if allowed is not None and (read not in allowed or write not in allowed):
                continue
            # leituras crescentes: a primeira aresta do par é a menor
            if not graph.has_edge(carry, carry_out):
                graph.add_edge(carry, carry_out, read=read, write=write)

    return graph


def shortest_loop_in(graph: nx.DiGraph) -> Optional[Loop]:
    """
    Menor laço em 0 num esqueleto de carries, ou None se não houver.

    Calcula a distância de cada estado até 0 (BFS no grafo reverso) e
    reconstrói o laço escolhendo sempre o menor próximo carry que ainda
    está num caminho mínimo.
    """
    if 0 not in graph:
        return None

    distance = nx.single_source_shortest_path_length(graph.reverse(copy=False), 0)
    closing = [1 + distance[head] for head in graph.successors(0) if head in distance]
    if not closing:
        return None

    remaining = min(closing)
    carries, reads, writes = [0], [], []
    current = 0
    while remaining:
        following = min(
            head for head in graph.successors(current)
            if distance.get(head) == remaining - 1
        )
        edge = graph.edges[current, following]
        carries.append(following)
        reads.append(edge["read"])
        writes.append(edge["write"])
        current = following
        remaining -= 1

    return Loop(tuple(carries), tuple(reads), tuple(writes))


def shortest_zero_loop_bfs(transducer: Transducer) -> Loop:
    """Menor laço não trivial em 0 via distâncias BFS."""
    loop = shortest_loop_in(zero_loop_graph(transducer))
    if loop is None:
        # ler 1 a partir de 0 sempre drena o carry de volta a 0
        raise VerificationError(
            f"Nenhum laço em 0 para T_{{{transducer.multiplier},{transducer.base}}}"
        )

    logger.debug(
        "Laço BFS encontrado",
        base=transducer.base,
        multiplier=transducer.multiplier,
        carries=loop.carries,
    )
    return loop


# =============================================================================
# DFS (backtracking com poda)
# =============================================================================
def shortest_zero_loop_dfs(transducer: Transducer) -> Loop:
    """
    Menor laço não trivial em 0 via DFS recursiva.

    Os vizinhos de cada estado são visitados em ordem crescente de carry;
    um laço só substitui o melhor se for estritamente mais curto, então o
    primeiro laço de comprimento mínimo encontrado é o de menor sequência
    de carries.
    """
    table = transducer.table
    graph = transducer.to_graph()
    neighbours_cache: dict[int, list[tuple[int, int, int]]] = {}

    def neighbours(carry: int) -> list[tuple[int, int, int]]:
        if carry not in neighbours_cache:
            smallest: dict[int, tuple[int, int]] = {}
            for _, carry_out, label in graph.out_edges(carry, data=True):
                read, write = label["read"], label["write"]
                if carry == 0 and read == 0:
                    continue
                smallest.setdefault(carry_out, (read, write))
            neighbours_cache[carry] = sorted(
                (carry_out, read, write) for carry_out, (read, write) in smallest.items()
            )
        return neighbours_cache[carry]

    carries: list[int] = [0]
    reads: list[int] = []
    writes: list[int] = []
    visited: set[int] = set()
    best: Optional[Loop] = None

    def explore(carry: int) -> None:
        nonlocal best
        for carry_out, read, write in neighbours(carry):
            if best is not None and len(reads) + 1 >= best.steps:
                return
            if carry_out == 0:
                best = Loop(
                    tuple(carries) + (0,),
                    tuple(reads) + (read,),
                    tuple(writes) + (write,),
                )
                continue
            if carry_out in visited:
                continue

            visited.add(carry_out)
            carries.append(carry_out)
            reads.append(read)
            writes.append(write)
            explore(carry_out)
            writes.pop()
            reads.pop()
            carries.pop()
            visited.discard(carry_out)

    explore(0)

    if best is None:
        raise VerificationError(
            f"Nenhum laço em 0 para T_{{{transducer.multiplier},{transducer.base}}}"
        )

    logger.debug(
        "Laço DFS encontrado",
        base=transducer.base,
        multiplier=transducer.multiplier,
        carries=best.carries,
    )
    return best


# =============================================================================
# Oráculo exaustivo
# =============================================================================
def enumerate_zero_loops(transducer: Transducer, max_steps: int) -> list[Loop]:
    """
    Todos os laços simples em 0 com no máximo ``max_steps`` passos.

    Arestas paralelas geram laços distintos. O resultado vem ordenado por
    (comprimento, carries, leituras). O custo cresce exponencialmente com
    ``max_steps`` em transdutores densos.
    """
    if max_steps < 1:
        return []

    graph = transducer.to_graph()
    found: list[Loop] = []
    carries: list[int] = [0]
    reads: list[int] = []
    writes: list[int] = []

    def extend(carry: int) -> None:
        if len(reads) == max_steps:
            return
        for _, carry_out, label in graph.out_edges(carry, data=True):
            read, write = label["read"], label["write"]
            if carry == 0 and read == 0:
                continue
            if carry_out == 0:
                found.append(Loop(
                    tuple(carries) + (0,),
                    tuple(reads) + (read,),
                    tuple(writes) + (write,),
                ))
                continue
            if carry_out in carries:
                continue

            carries.append(carry_out)
            reads.append(read)
            writes.append(write)
            extend(carry_out)
            writes.pop()
            reads.pop()
            carries.pop()

    extend(0)
    found.sort(key=Loop.sort_key)
    return found


def compare_algorithms(transducer: Transducer) -> AlgorithmComparison:
    """Executa BFS e DFS e mede o tempo de cada um."""
    start = time.perf_counter()
    bfs = shortest_zero_loop_bfs(transducer)
    bfs_seconds = time.perf_counter() - start

    start = time.perf_counter()
    dfs = shortest_zero_loop_dfs(transducer)
    dfs_seconds = time.perf_counter() - start

    comparison = AlgorithmComparison(bfs, dfs, bfs_seconds, dfs_seconds)
    if not comparison.agree:
        logger.error(
            "BFS e DFS divergem",
            base=transducer.base,
            multiplier=transducer.multiplier,
            bfs=bfs.carries,
            dfs=dfs.carries,
        )
    return comparison
