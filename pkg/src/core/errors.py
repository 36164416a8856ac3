"""
Hierarquia de Exceções
======================

Todas as falhas de contrato da biblioteca herdam de ``TransducerError``,
o que permite à CLI mapear qualquer erro de domínio para o código de
saída 1 sem capturar exceções genéricas.
"""


class TransducerError(Exception):
    """Erro base da biblioteca de transdutores."""
    pass


class DomainError(TransducerError, ValueError):
    """Valor fora do domínio de uma operação."""
    pass


class InvalidBaseError(DomainError):
    """Base menor que 2."""
    pass


class InvalidDigitError(DomainError):
    """Dígito fora do intervalo 0..b-1 ou numeral malformado."""
    pass


class CapacityError(TransducerError, OverflowError):
    """Valor excederia a palavra de 64 bits."""
    pass


class VerificationError(TransducerError):
    """Falha numa verificação cruzada interna (BFS x DFS, testemunha)."""
    pass
