"""
Exportação Graphviz DOT
=======================

Gera um documento DOT para T_{m,b}: estados como círculos, uma aresta
por transição rotulada "(r,w)", com o traço determinado pela leitura e a
cor determinada pela escrita. Arestas paralelas nunca são fundidas.

A saída é determinística byte a byte para entradas iguais.

O atributo ``dasharray`` só é lido por renderizadores SVG que o repassam;
o Graphviz o ignora. Para que leituras diferentes continuem distinguíveis
na renderização padrão, cada padrão leva também uma ponta de seta própria
e padrões customizados com segmentos de 1 ponto viram ``dotted``.

Autor: [Seu Nome]
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Union

import structlog
import yaml

from ..analysis.traversal import Loop, validate_loop
from ..core.errors import DomainError
from ..core.transducer import Transducer

logger = structlog.get_logger(__name__)

BUILTIN_STYLES = ("solid", "dotted", "dashed")


@dataclass(frozen=True)
class DashPattern:
    """Padrão de traço: (offset, sequência liga/desliga em pontos) e ponta de seta."""

    name: str
    offset: int = 0
    on_off: tuple[int, ...] = ()
    arrowhead: str = "normal"

    def __post_init__(self):
        object.__setattr__(self, "on_off", tuple(self.on_off))
        if self.name not in BUILTIN_STYLES and not self.on_off:
            raise DomainError(f"Padrão '{self.name}' precisa de sequência liga/desliga")
        if not self.arrowhead:
            raise DomainError(f"Padrão '{self.name}' sem ponta de seta")

    @property
    def dot_style(self) -> str:
        if self.name in BUILTIN_STYLES:
            return self.name
        # segmentos ligados de no máximo 1 ponto
        return "dotted" if max(self.on_off[::2]) <= 1 else "dashed"

    @property
    def dasharray(self) -> Optional[str]:
        if not self.on_off:
            return None
        return f"{self.offset};" + ",".join(str(x) for x in self.on_off)


DEFAULT_DASH_PATTERNS = (
    DashPattern("solid"),
    DashPattern("dotted"),
    DashPattern("dashed"),
    DashPattern("dashdotdot", 0, (2, 7, 1, 14), "dot"),
    DashPattern("longdash", 0, (10, 3), "vee"),
    DashPattern("dashdot", 0, (3, 5, 1, 5), "diamond"),
    DashPattern("loosedot", 0, (1, 10), "odot"),
    DashPattern("loosedash", 0, (5, 10), "box"),
)

DEFAULT_PALETTE = (
    "red",
    "blue",
    "green",
    "orange",
    "purple",
    "brown",
    "magenta",
    "black",
)


@dataclass(frozen=True)
class StyleConfig:
    """Traços por leitura e cores por escrita."""

    dash_patterns: tuple[DashPattern, ...] = DEFAULT_DASH_PATTERNS
    color_palette: tuple[str, ...] = DEFAULT_PALETTE
    readability_warning_threshold: int = 8

    def __post_init__(self):
        object.__setattr__(self, "dash_patterns", tuple(self.dash_patterns))
        object.__setattr__(self, "color_palette", tuple(self.color_palette))
        if not self.dash_patterns or not self.color_palette:
            raise DomainError("Listas de traços e cores não podem ser vazias")
        keys = [(p.name, p.offset, p.on_off, p.arrowhead) for p in self.dash_patterns]
        if len(set(keys)) != len(keys):
            raise DomainError("Padrões de traço repetidos")
        if len(set(self.color_palette)) != len(self.color_palette):
            raise DomainError("Cores repetidas na paleta")

    def dash_for(self, read: int) -> DashPattern:
        return self.dash_patterns[read % len(self.dash_patterns)]

    def color_for(self, write: int) -> str:
        return self.color_palette[write % len(self.color_palette)]

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "StyleConfig":
        """
        Carrega o estilo de um arquivo YAML.

        Chaves opcionais: ``dash_patterns`` (lista de {name, offset, on_off, arrowhead}),
        ``color_palette`` e ``readability_warning_threshold``.
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Arquivo não encontrado: {path}")

        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}

        kwargs = {}
        if "dash_patterns" in data:
            kwargs["dash_patterns"] = tuple(
                DashPattern(
                    name=item["name"],
                    offset=item.get("offset", 0),
                    on_off=tuple(item.get("on_off", ())),
                    arrowhead=item.get("arrowhead", "normal"),
                )
                for item in data["dash_patterns"]
            )
        if "color_palette" in data:
            kwargs["color_palette"] = tuple(data["color_palette"])
        if "readability_warning_threshold" in data:
            kwargs["readability_warning_threshold"] = int(data["readability_warning_threshold"])

        logger.info("Estilo carregado", path=str(path))
        return cls(**kwargs)


def _warnings(transducer: Transducer, style: StyleConfig) -> list[str]:
    notes = []
    base, multiplier = transducer.base, transducer.multiplier
    if base > len(style.dash_patterns):
        notes.append(
            f"aviso: {base} leituras para {len(style.dash_patterns)} traços; "
            f"traços reutilizados (leitura mod {len(style.dash_patterns)})"
        )
    if base > len(style.color_palette):
        notes.append(
            f"aviso: {base} escritas para {len(style.color_palette)} cores; "
            f"cores reutilizadas (escrita mod {len(style.color_palette)})"
        )
    threshold = style.readability_warning_threshold
    if multiplier >= threshold or base >= threshold:
        notes.append(
            f"aviso: T_{{{multiplier},{base}}} tem {multiplier * base} arestas; "
            f"legibilidade comprometida para m ou b >= {threshold}"
        )
    return notes


def _edge_attributes(
    read: int,
    write: int,
    style: StyleConfig,
    emphasis: Optional[bool]
) -> str:
    dash = style.dash_for(read)
    dot_style = dash.dot_style
    if emphasis:
        dot_style += ",bold"
    parts = [
        f'label="({read},{write})"',
        f'style="{dot_style}"',
        f'color="{style.color_for(write)}"',
    ]
    if dash.arrowhead != "normal":
        parts.append(f'arrowhead="{dash.arrowhead}"')
    if dash.dasharray:
        parts.append(f'dasharray="{dash.dasharray}"')
    if emphasis is True:
        parts.append("penwidth=3")
    elif emphasis is False:
        parts.append("penwidth=0.5")
    return ", ".join(parts)


def _dot_lines(
    transducer: Transducer,
    style: StyleConfig,
    highlighted: Optional[set[tuple[int, int]]]
) -> Iterator[str]:
    base, multiplier = transducer.base, transducer.multiplier
    notes = _warnings(transducer, style)
    for note in notes:
        logger.warning("Exportação DOT", note=note)

    yield f"// transdutor de multiplicação T_{{{multiplier},{base}}}"
    for note in notes:
        yield f"// {note}"
    yield f'digraph "T_{multiplier}_{base}" {{'
    yield "  rankdir=LR;"
    yield "  node [shape=circle];"
    for state in transducer.states:
        yield f'  {state} [label="{state}"];'
    for t in transducer.transitions():
        emphasis = None if highlighted is None else (t.carry_in, t.read) in highlighted
        attributes = _edge_attributes(t.read, t.write, style, emphasis)
        yield f"  {t.carry_in} -> {t.carry_out} [{attributes}];"
    yield "}"


def to_dot(transducer: Transducer, style: Optional[StyleConfig] = None) -> str:
    """Documento DOT com m nós e m*b arestas."""
    style = style or StyleConfig()
    return "\n".join(_dot_lines(transducer, style, highlighted=None)) + "\n"


def loop_overlay_dot(
    transducer: Transducer,
    loop: Loop,
    style: Optional[StyleConfig] = None
) -> str:
    """
    Mesmo DOT de ``to_dot`` com as arestas do laço em negrito e as demais
    atenuadas.

    Raises:
        DomainError: se o laço não pertencer ao transdutor
    """
    style = style or StyleConfig()
    validate_loop(transducer, loop)
    highlighted = {
        (loop.carries[i], loop.reads[i]) for i in range(loop.steps)
    }
    return "\n".join(_dot_lines(transducer, style, highlighted=highlighted)) + "\n"

