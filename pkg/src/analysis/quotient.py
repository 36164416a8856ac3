"""
Módulo de Conjuntos Quociente com Dígitos Restritos
===================================================

S(b; D) é o conjunto dos naturais positivos cujos dígitos em base b
pertencem a D; Q(b; D) é o conjunto das razões inteiras s / s' com
s, s' em S.

n pertence a Q(b; D) se e só se o transdutor T_{n,b}, restrito às
transições com leitura e escrita em D, tem um laço em 0 com leitura não
nula. A palavra lida do laço é uma testemunha s e a escrita é n * s.
O grafo restrito é finito (no máximo n estados), logo a decisão é exata.

Autor: [Seu Nome]
"""

from dataclasses import dataclass
from multiprocessing.context import BaseContext
from typing import Iterable, Iterator, Optional

import structlog

from ..core.errors import DomainError, InvalidBaseError, InvalidDigitError, VerificationError
from ..core.log import process_pool
from ..core.numeral import DigitString, to_digits, to_nat
from ..core.transducer import TransducerSpec, build
from .traversal import Loop, replay_loop, shortest_loop_in, zero_loop_graph

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class DigitSet:
    """Conjunto de dígitos permitidos D em base b (contém 0 e algum não nulo)."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise InvalidBaseError(f"Base inválida: {self.base} (mínimo 2)")
        digits = tuple(self.digits)
        if list(digits) != sorted(set(digits)):
            raise InvalidDigitError(f"Dígitos devem ser estritamente crescentes: {digits}")
        for digit in digits:
            if not 0 <= digit < self.base:
                raise InvalidDigitError(
                    f"Dígito {digit} fora do intervalo 0..{self.base - 1}"
                )
        if 0 not in digits:
            raise InvalidDigitError(f"O conjunto de dígitos deve conter 0: {digits}")
        if len(digits) < 2:
            raise InvalidDigitError("O conjunto de dígitos precisa de um dígito não nulo")
        object.__setattr__(self, "digits", digits)

    @property
    def nonzero(self) -> tuple[int, ...]:
        return self.digits[1:]

    @classmethod
    def parse(cls, text: str, base: int) -> "DigitSet":
        """Lê dígitos separados por vírgula, ex.: ``"0,1"``."""
        tokens = [token.strip() for token in text.split(",") if token.strip()]
        if not tokens or not all(t.isascii() and t.isdigit() for t in tokens):
            raise InvalidDigitError(f"Conjunto de dígitos malformado: {text!r}")
        return cls(base=base, digits=tuple(sorted(set(int(t) for t in tokens))))

    @classmethod
    def full(cls, base: int) -> "DigitSet":
        """Conjunto irrestrito {0, ..., b-1}."""
        return cls(base=base, digits=tuple(range(base)))


@dataclass(frozen=True)
class MembershipResult:
    """Decisão de pertinência de n em Q(b; D), com testemunha se positiva."""

    n: int
    digit_set: DigitSet
    is_member: bool
    witness_loop: Optional[Loop] = None
    witness_s: Optional[int] = None
    witness_product: Optional[int] = None


def is_in_s(value: int, ds: DigitSet) -> bool:
    """True se value > 0 e todos os seus dígitos em base b estão em D."""
    if value < 1:
        return False
    allowed = set(ds.digits)
    return all(digit in allowed for digit in to_digits(value, ds.base).digits)


def iter_s_members(ds: DigitSet) -> Iterator[int]:
    """
    Membros positivos de S(b; D) em ordem crescente.

    Gera por comprimento: todo numeral de L dígitos (líder não nulo) é
    maior que qualquer numeral mais curto.
    """
    shorter = [0]
    length = 1
    while True:
        scale = ds.base ** (length - 1)
        current = sorted(lead * scale + rest for lead in ds.nonzero for rest in shorter)
        yield from current
        shorter.extend(current)
        length += 1


def s_members(ds: DigitSet, count: int) -> list[int]:
    """Os ``count`` menores membros positivos de S(b; D)."""
    if count < 1:
        raise DomainError(f"Quantidade inválida: {count}")
    members = []
    for value in iter_s_members(ds):
        members.append(value)
        if len(members) == count:
            break
    return members


def quotient_member(n: int, ds: DigitSet) -> MembershipResult:
    """
    Decide se n pertence a Q(b; D) por busca de ciclo no transdutor restrito.

    Raises:
        DomainError: se n < 1
        VerificationError: se a testemunha reconstruída não satisfizer
            produto = n * s
    """
    if n < 1:
        raise DomainError(f"Candidato a quociente deve ser >= 1 (recebido {n})")

    transducer = build(TransducerSpec.multiply_by(n, ds.base))
    loop = shortest_loop_in(zero_loop_graph(transducer, digits=ds.digits))

    if loop is None:
        logger.info("Quociente decidido", n=n, base=ds.base, digits=ds.digits, member=False)
        return MembershipResult(n=n, digit_set=ds, is_member=False)

    witness_s = to_nat(DigitString(ds.base, loop.reads))
    witness_product = to_nat(DigitString(ds.base, loop.writes))
    if witness_product != n * witness_s or replay_loop(transducer, loop.reads) != loop:
        logger.error("Testemunha inválida", n=n, s=witness_s, product=witness_product)
        raise VerificationError(
            f"Testemunha inconsistente para n={n}: {witness_product} != {n} * {witness_s}"
        )

    logger.info(
        "Quociente decidido",
        n=n,
        base=ds.base,
        digits=ds.digits,
        member=True,
        witness_s=witness_s,
    )
    return MembershipResult(
        n=n,
        digit_set=ds,
        is_member=True,
        witness_loop=loop,
        witness_s=witness_s,
        witness_product=witness_product,
    )


def oracle_member(n: int, ds: DigitSet, bound: int) -> Optional[tuple[int, int]]:
    """
    Força bruta: menor s em S com s <= bound e n * s em S.

    Semi-decisão: ``None`` só prova ausência dentro do limite.
    """
    if n < 1 or bound < 1:
        raise DomainError(f"Parâmetros inválidos: n={n}, bound={bound}")
    for s in iter_s_members(ds):
        if s > bound:
            return None
        if is_in_s(n * s, ds):
            return s, n * s
    return None


def _member_of(query: tuple[int, DigitSet]) -> MembershipResult:
    n, ds = query
    return quotient_member(n, ds)


def quotient_batch(
    ns: Iterable[int],
    ds: DigitSet,
    workers: int = 1,
    mp_context: Optional[BaseContext] = None
) -> list[MembershipResult]:
    """Decide vários candidatos; resultados na ordem de ``ns``."""
    queries = [(n, ds) for n in ns]
    if workers <= 1 or len(queries) < 2:
        return [_member_of(query) for query in queries]
    with process_pool(workers, mp_context) as executor:
        return list(executor.map(_member_of, queries))
