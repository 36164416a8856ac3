"""Configuração do structlog para a CLI e para os processos de trabalho."""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from multiprocessing.context import BaseContext
from typing import Optional

import structlog

# nível escolhido pela última chamada de configure_logging
_verbose = False


def configure_logging(verbose: bool = False) -> None:
    """
    Direciona os logs para stderr.

    stdout fica reservado aos artefatos (CSV, JSON, DOT).

    Args:
        verbose: Se True, emite eventos a partir de DEBUG; senão WARNING
    """
    global _verbose
    _verbose = verbose

    level = logging.DEBUG if verbose else logging.WARNING
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        # sys.stderr resolvido a cada evento: o stream pode ser trocado
        logger_factory=lambda *args: structlog.PrintLogger(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def process_pool(
    workers: int,
    mp_context: Optional[BaseContext] = None
) -> ProcessPoolExecutor:
    """
    Pool de processos cujos workers herdam a configuração de log.

    Com spawn ou forkserver o worker não copia o estado do pai; sem o
    initializer o structlog voltaria ao padrão e escreveria em stdout.
    """
    return ProcessPoolExecutor(
        max_workers=workers,
        mp_context=mp_context,
        initializer=configure_logging,
        initargs=(_verbose,),
    )
