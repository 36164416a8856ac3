"""
Core Module - Numerais em base b e o transdutor de multiplicação
"""

from .errors import (
    CapacityError,
    DomainError,
    InvalidBaseError,
    InvalidDigitError,
    TransducerError,
    VerificationError
)

from .log import configure_logging, process_pool

from .numeral import (
    MAX_WORD,
    DigitString,
    digit_length,
    format_numeral,
    parse_numeral,
    to_digits,
    to_nat
)

from .transducer import (
    MultiplicationTrace,
    StepRecord,
    Transducer,
    TransducerSpec,
    Transition,
    build,
    run,
    step
)

__all__ = [
    # Erros
    'TransducerError',
    'DomainError',
    'InvalidBaseError',
    'InvalidDigitError',
    'CapacityError',
    'VerificationError',
    # Logging
    'configure_logging',
    'process_pool',
    # Numerais
    'MAX_WORD',
    'DigitString',
    'digit_length',
    'format_numeral',
    'parse_numeral',
    'to_digits',
    'to_nat',
    # Transdutor
    'TransducerSpec',
    'StepRecord',
    'Transition',
    'Transducer',
    'MultiplicationTrace',
    'build',
    'run',
    'step'
]
