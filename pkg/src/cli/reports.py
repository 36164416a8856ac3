"""
Serialização de Relatórios de Varredura
=======================================

CSV e JSON com os mesmos nomes de campo de ``CellReport``, para que os
dois esquemas nunca divirjam.
"""

import csv
import io
import json
from dataclasses import fields
from pathlib import Path
from typing import Union

import structlog

from ..analysis.laws import CellReport
from ..core.errors import DomainError

logger = structlog.get_logger(__name__)

REPORT_FIELDS = [f.name for f in fields(CellReport)]
SUPPORTED_FORMATS = ("csv", "json")

_BOOL_FIELDS = {f.name for f in fields(CellReport) if f.type in (bool, "bool")}


def _csv_value(name: str, value) -> str:
    if name == "measured_carries":
        return ";".join(str(c) for c in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _parse_value(name: str, text: str):
    if name == "measured_carries":
        return tuple(int(c) for c in text.split(";"))
    if name in _BOOL_FIELDS:
        if text not in ("true", "false"):
            raise DomainError(f"Valor booleano inválido em {name}: {text!r}")
        return text == "true"
    return int(text)


def report_to_dict(report: CellReport) -> dict:
    data = {name: getattr(report, name) for name in REPORT_FIELDS}
    data["measured_carries"] = list(report.measured_carries)
    return data


def write_reports(reports: list[CellReport], format: str = "csv") -> str:
    """
    Serializa relatórios em CSV (com cabeçalho) ou JSON.

    Raises:
        DomainError: lista vazia ou formato não suportado
    """
    if not reports:
        raise DomainError("Nenhum relatório para serializar")
    if format not in SUPPORTED_FORMATS:
        raise DomainError(
            f"Formato '{format}' não suportado. Disponíveis: {', '.join(SUPPORTED_FORMATS)}"
        )

    if format == "json":
        return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for report in reports:
        writer.writerow(_csv_value(name, getattr(report, name)) for name in REPORT_FIELDS)
    return buffer.getvalue()


def read_reports(text: str, format: str = "csv") -> list[CellReport]:
    """Inverso de ``write_reports``."""
    if format == "json":
        return [
            CellReport(**{**item, "measured_carries": tuple(item["measured_carries"])})
            for item in json.loads(text)
        ]
    if format != "csv":
        raise DomainError(f"Formato '{format}' não suportado")

    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != REPORT_FIELDS:
        raise DomainError(f"Cabeçalho CSV inesperado: {reader.fieldnames}")
    return [
        CellReport(**{name: _parse_value(name, row[name]) for name in REPORT_FIELDS})
        for row in reader
    ]


def save_artifact(text: str, output_path: Union[str, Path]) -> str:
    """Grava um artefato textual (CSV, JSON ou DOT)."""
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info("Artefato salvo", path=str(output_path))
    return str(output_path.absolute())
