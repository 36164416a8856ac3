"""Export Module - Graphviz DOT"""

from .dot import (
    DEFAULT_DASH_PATTERNS,
    DEFAULT_PALETTE,
    DashPattern,
    StyleConfig,
    loop_overlay_dot,
    to_dot
)

__all__ = [
    'DashPattern',
    'StyleConfig',
    'DEFAULT_DASH_PATTERNS',
    'DEFAULT_PALETTE',
    'to_dot',
    'loop_overlay_dot'
]
