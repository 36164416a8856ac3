"""
Módulo de Numerais em Base b
============================

Representa numerais de base b como sequências explícitas de dígitos e
converte entre sequências de dígitos e números naturais.

A ordem dos dígitos é little-endian: ``digits[i]`` é o coeficiente de
``b**i``. É a ordem em que o transdutor consome a leitura. A exibição
(``format_numeral`` e ``str``) imprime o dígito mais significativo
primeiro, como na notação ``[202]_3``.

Autor: [Seu Nome]
"""

from dataclasses import dataclass

from .errors import CapacityError, DomainError, InvalidBaseError, InvalidDigitError

MAX_WORD = 2**64 - 1


@dataclass(frozen=True)
class DigitString:
    """Numeral de base b; ``digits[0]`` é o dígito menos significativo."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise InvalidBaseError(f"Base inválida: {self.base} (mínimo 2)")
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise InvalidDigitError("Numeral vazio: use [0] para o valor zero")
        for position, digit in enumerate(self.digits):
            if not 0 <= digit < self.base:
                raise InvalidDigitError(
                    f"Dígito {digit} na posição {position} fora do intervalo "
                    f"0..{self.base - 1}"
                )

    @property
    def length(self) -> int:
        return len(self.digits)

    @property
    def is_canonical(self) -> bool:
        """Sem zeros à esquerda, exceto o próprio zero ``[0]``."""
        return self.digits[-1] != 0 or self.digits == (0,)

    def normalized(self) -> "DigitString":
        """Remove zeros mais significativos."""
        digits = list(self.digits)
        while len(digits) > 1 and digits[-1] == 0:
            digits.pop()
        return DigitString(self.base, tuple(digits))

    def __str__(self) -> str:
        return f"[{format_numeral(self)}]_{self.base}"


def _check_base(base: int) -> None:
    if base < 2:
        raise InvalidBaseError(f"Base inválida: {base} (mínimo 2)")


def to_digits(n: int, base: int) -> DigitString:
    """
    Converte um natural para a sua representação canônica em base b.

    Args:
        n: Natural a converter (0 <= n <= MAX_WORD)
        base: Base (>= 2)

    Returns:
        DigitString canônico com to_nat(resultado) == n
    """
    _check_base(base)
    if n < 0:
        raise DomainError(f"Números negativos não são suportados: {n}")
    if n > MAX_WORD:
        raise CapacityError(f"Valor {n} excede a palavra de 64 bits")

    if n == 0:
        return DigitString(base, (0,))

    digits = []
    while n:
        n, digit = divmod(n, base)
        digits.append(digit)
    return DigitString(base, tuple(digits))


def to_nat(d: DigitString) -> int:
    """
    Avalia um numeral: soma de ``digits[i] * base**i``.

    Aceita numerais não canônicos (zeros à esquerda são ignorados).
    """
    value = 0
    for digit in reversed(d.digits):
        value = value * d.base + digit
        if value > MAX_WORD:
            raise CapacityError(
                f"Numeral com {d.length} dígitos em base {d.base} excede "
                f"a palavra de 64 bits"
            )
    return value


def digit_length(n: int, base: int) -> int:
    """Número de dígitos de n em base b, por divisões sucessivas."""
    _check_base(base)
    length = 1
    while n >= base:
        n //= base
        length += 1
    return length


def parse_numeral(text: str, base: int) -> DigitString:
    """
    Lê um numeral textual, dígito mais significativo primeiro.

    Em bases até 10 os dígitos podem vir justapostos ("202") ou separados
    por vírgula ("2,0,2"). Acima de 10 a vírgula é obrigatória; um texto
    sem vírgulas é lido como um único dígito.
    """
    _check_base(base)
    text = text.strip()
    if not text:
        raise InvalidDigitError("Numeral vazio")

    if "," in text:
        tokens = [token.strip() for token in text.split(",")]
    elif base <= 10:
        tokens = list(text)
    else:
        tokens = [text]

    digits = []
    for token in tokens:
        if not (token.isascii() and token.isdigit()):
            raise InvalidDigitError(f"Dígito malformado: {token!r} em {text!r}")
        digits.append(int(token))

    return DigitString(base, tuple(reversed(digits)))


def format_numeral(d: DigitString) -> str:
    """Formata o numeral com o dígito mais significativo primeiro."""
    separator = "" if d.base <= 10 else ","
    return separator.join(str(digit) for digit in reversed(d.digits))


if __name__ == "__main__":
    import sys

    if len(sys.argv) < 3:
        print("Uso: python numeral.py <n> <base>")
        sys.exit(1)

    numeral = to_digits(int(sys.argv[1]), int(sys.argv[2]))
    print(f"Numeral: {numeral}")
    print(f"Dígitos (little-endian): {list(numeral.digits)}")
    print(f"Comprimento: {numeral.length}")
