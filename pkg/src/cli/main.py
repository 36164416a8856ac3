"""
CLI - Interface de Linha de Comando
===================================

Uso:
    python -m src.cli.main --help
    python -m src.cli.main multiply --base 3 --mult 4 --value 202
    python -m src.cli.main loop --base 3 --mult 10 --algo both
    python -m src.cli.main sweep --b-max 8 --m-max 8 --format csv
    python -m src.cli.main quotient --base 3 --digits 0,1 --mult 4
    python -m src.cli.main export-dot --base 3 --mult 4 --out t43.dot

Códigos de saída: 0 sucesso, 1 erro de domínio, 2 erro de uso.

Autor: [Seu Nome]
"""

import json
import sys
from dataclasses import dataclass
from typing import Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src import __version__
from src.analysis import (
    DigitSet,
    compare_algorithms,
    quotient_batch,
    shortest_zero_loop_bfs,
    shortest_zero_loop_dfs,
    summarize,
    sweep,
)
from src.cli.reports import save_artifact, write_reports
from src.core import (
    MAX_WORD,
    DigitString,
    TransducerError,
    TransducerSpec,
    build,
    configure_logging,
    format_numeral,
    parse_numeral,
    run,
    to_nat,
)
from src.export import StyleConfig, loop_overlay_dot, to_dot

console = Console()
err_console = Console(stderr=True)

SUBCOMMANDS = ("build", "multiply", "loop", "sweep", "quotient", "export-dot")
ALGORITHMS = ("bfs", "dfs", "both")

# flags obrigatórias por subcomando
REQUIRED_FLAGS = {
    "build": ("base", "multiplier"),
    "multiply": ("base", "multiplier", "value"),
    "loop": ("base", "multiplier"),
    "sweep": ("b_max", "m_max"),
    "quotient": ("base", "digits"),
    "export-dot": ("base", "multiplier"),
}

# formatos aceitos por subcomando (o primeiro é o padrão)
ALLOWED_FORMATS = {
    "build": ("text", "json", "dot"),
    "multiply": ("text", "json"),
    "loop": ("text", "json"),
    "sweep": ("csv", "json", "text"),
    "quotient": ("text", "json"),
    "export-dot": ("dot",),
}


@dataclass
class RunConfig:
    """Configuração de uma execução da CLI."""

    subcommand: str
    base: Optional[int] = None
    multiplier: Optional[int] = None
    value: Optional[str] = None
    b_max: Optional[int] = None
    m_max: Optional[int] = None
    digits: Optional[str] = None
    algo: str = "both"
    workers: int = 1
    out_path: Optional[str] = None
    format: Optional[str] = None
    mult_max: Optional[int] = None
    style_path: Optional[str] = None
    highlight_loop: bool = False

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise click.UsageError(f"Subcomando '{self.subcommand}' não suportado")
        if self.format is None:
            self.format = ALLOWED_FORMATS[self.subcommand][0]

    def check(self) -> None:
        """Valida flags obrigatórias, formato e limites de 64 bits."""
        for name in REQUIRED_FLAGS[self.subcommand]:
            if getattr(self, name) is None:
                raise click.UsageError(f"Flag obrigatória ausente: --{_flag(name)}")
        if self.subcommand == "quotient" and self.multiplier is None and self.mult_max is None:
            raise click.UsageError("Informe --mult ou --mult-max")

        if self.format not in ALLOWED_FORMATS[self.subcommand]:
            raise click.UsageError(
                f"Formato '{self.format}' não suportado por {self.subcommand}. "
                f"Disponíveis: {', '.join(ALLOWED_FORMATS[self.subcommand])}"
            )
        if self.algo not in ALGORITHMS:
            raise click.UsageError(f"Algoritmo '{self.algo}' não suportado")

        for name in ("base", "multiplier", "b_max", "m_max", "mult_max", "workers"):
            value = getattr(self, name)
            if value is not None and not 1 <= value <= MAX_WORD:
                raise click.BadParameter(
                    f"{value} fora do intervalo 1..{MAX_WORD}", param_hint=f"'--{_flag(name)}'"
                )
        if self.base is not None and self.base < 2:
            raise click.BadParameter(f"base {self.base} < 2", param_hint="'--base'")


def _flag(name: str) -> str:
    return {"multiplier": "mult", "out_path": "out"}.get(name, name.replace("_", "-"))


def _spec(config: RunConfig) -> TransducerSpec:
    return TransducerSpec(base=config.base, multiplier=config.multiplier)


# =============================================================================
# Handlers por subcomando
# =============================================================================
def _run_build(config: RunConfig) -> Optional[str]:
    transducer = build(_spec(config))

    if config.format == "dot":
        return to_dot(transducer)
    if config.format == "json":
        return json.dumps({
            "base": transducer.base,
            "multiplier": transducer.multiplier,
            "states": list(transducer.states),
            "transitions": [
                {"carry_in": t.carry_in, "read": t.read, "write": t.write, "carry_out": t.carry_out}
                for t in transducer.transitions()
            ],
        }, indent=2) + "\n"

    table = Table(title=f"T_{{{transducer.multiplier},{transducer.base}}}")
    table.add_column("Carry", style="cyan")
    table.add_column("(leitura,escrita)")
    table.add_column("Próximo carry", style="cyan")
    for t in transducer.transitions():
        table.add_row(str(t.carry_in), t.label, str(t.carry_out))
    console.print(table)
    console.print(f"Estados: {transducer.multiplier}  Transições: {transducer.transition_count}")
    return None


def _run_multiply(config: RunConfig) -> Optional[str]:
    try:
        numeral = parse_numeral(config.value, config.base)
    except TransducerError as e:
        raise click.BadParameter(str(e), param_hint="'--value'")

    trace = run(build(_spec(config)), numeral)

    if config.format == "json":
        return json.dumps({
            "base": config.base,
            "multiplier": config.multiplier,
            "input": format_numeral(trace.input),
            "output": format_numeral(trace.output),
            "product": to_nat(trace.output),
            "steps": [
                {"carry_in": s.carry_in, "read": s.read, "total": s.total,
                 "write": s.write, "carry_out": s.carry_out}
                for s in trace.steps
            ],
        }, indent=2) + "\n"

    console.print(f"\n[bold]Produto:[/bold] {format_numeral(trace.output)} (base {config.base})")
    console.print(f"[bold]Valor:[/bold] {to_nat(trace.input)} * {config.multiplier} = {to_nat(trace.output)}")

    table = Table(title="Passos")
    table.add_column("i", style="cyan")
    table.add_column("c")
    table.add_column("r")
    table.add_column("t")
    table.add_column("w")
    table.add_column("c'")
    for i, s in enumerate(trace.steps):
        table.add_row(str(i), str(s.carry_in), str(s.read), str(s.total), str(s.write), str(s.carry_out))
    console.print(table)
    return None


def _join(word) -> str:
    return ",".join(str(x) for x in word)


def _run_loop(config: RunConfig) -> Optional[str]:
    transducer = build(_spec(config))

    agree = None
    timings = {}
    if config.algo == "both":
        comparison = compare_algorithms(transducer)
        loop = comparison.bfs
        agree = comparison.agree
        timings = {"bfs_seconds": comparison.bfs_seconds, "dfs_seconds": comparison.dfs_seconds}
    elif config.algo == "bfs":
        loop = shortest_zero_loop_bfs(transducer)
    else:
        loop = shortest_zero_loop_dfs(transducer)

    write_value = to_nat(DigitString(config.base, loop.writes))

    if config.format == "json":
        data = {
            "base": config.base,
            "multiplier": config.multiplier,
            "algo": config.algo,
            "length": loop.length,
            "carries": list(loop.carries),
            "reads": list(loop.reads),
            "writes": list(loop.writes),
            "write_value": write_value,
        }
        if agree is not None:
            data["algorithms_agree"] = agree
        return json.dumps(data, indent=2) + "\n"

    console.print(f"\n[bold]Carries:[/bold] {_join(loop.carries)}")
    console.print(f"[bold]Leituras:[/bold] {_join(loop.reads)}")
    console.print(f"[bold]Escritas:[/bold] {_join(loop.writes)} (valor {write_value})")
    console.print(f"[bold]Comprimento:[/bold] {loop.length}")
    if agree is not None:
        console.print(f"algorithms agree: {'true' if agree else 'false'}")
        console.print(
            f"[dim]BFS {timings['bfs_seconds'] * 1000:.3f} ms / "
            f"DFS {timings['dfs_seconds'] * 1000:.3f} ms[/dim]"
        )
    return None


def _summary_table(reports) -> Table:
    summary = summarize(reports)
    table = Table(title="Resumo da Varredura")
    table.add_column("Verificação", style="cyan")
    table.add_column("Divergências")
    table.add_row("Células", str(summary.cells))
    table.add_row("Recorrência de carries", str(summary.conjecture1_mismatches))
    table.add_row("Leitura unitária", str(summary.unit_read_mismatches))
    table.add_row("Escrita = m", str(summary.write_value_mismatches))
    table.add_row("Comprimento floor(log_b m) + 2", str(summary.log_formula_mismatches))
    table.add_row(
        "Comprimento floor(m^(1/b)) + 2 (reportado)",
        f"[yellow]{len(summary.printed_formula_disagreements)}[/yellow]",
    )
    return table


def _run_sweep(config: RunConfig) -> Optional[str]:
    reports = sweep(config.b_max, config.m_max, workers=config.workers)

    if config.format == "text":
        console.print(_summary_table(reports))
        return None

    err_console.print(_summary_table(reports))
    return write_reports(reports, config.format)


def _run_quotient(config: RunConfig) -> Optional[str]:
    try:
        ds = DigitSet.parse(config.digits, config.base)
    except TransducerError as e:
        raise click.BadParameter(str(e), param_hint="'--digits'")

    if config.mult_max is not None:
        candidates = range(1, config.mult_max + 1)
    else:
        candidates = [config.multiplier]
    results = quotient_batch(candidates, ds, workers=config.workers)

    if config.format == "json":
        return json.dumps([
            {
                "n": r.n,
                "base": ds.base,
                "digits": list(ds.digits),
                "is_member": r.is_member,
                "witness_s": r.witness_s,
                "witness_product": r.witness_product,
                "witness_carries": list(r.witness_loop.carries) if r.witness_loop else None,
            }
            for r in results
        ], indent=2) + "\n"

    table = Table(title=f"Q({ds.base}; {{{_join(ds.digits)}}})")
    table.add_column("n", style="cyan")
    table.add_column("Pertence")
    table.add_column("s")
    table.add_column("n*s")
    for r in results:
        if r.is_member:
            s = format_numeral(DigitString(ds.base, r.witness_loop.reads).normalized())
            product = format_numeral(DigitString(ds.base, r.witness_loop.writes).normalized())
            table.add_row(str(r.n), "[green]sim[/green]", f"{r.witness_s} = [{s}]", f"{r.witness_product} = [{product}]")
        else:
            table.add_row(str(r.n), "[red]não[/red]", "-", "-")
    console.print(table)
    return None


def _run_export_dot(config: RunConfig) -> Optional[str]:
    style = StyleConfig.from_yaml(config.style_path) if config.style_path else StyleConfig()
    transducer = build(_spec(config))
    if config.highlight_loop:
        return loop_overlay_dot(transducer, shortest_zero_loop_bfs(transducer), style)
    return to_dot(transducer, style)


HANDLERS = {
    "build": _run_build,
    "multiply": _run_multiply,
    "loop": _run_loop,
    "sweep": _run_sweep,
    "quotient": _run_quotient,
    "export-dot": _run_export_dot,
}


def dispatch(config: RunConfig) -> int:
    """
    Executa o subcomando configurado.

    Returns:
        0 em sucesso, 1 em erro de domínio, 2 em erro de uso
    """
    try:
        config.check()
        artifact = HANDLERS[config.subcommand](config)
    except click.UsageError as e:
        err_console.print(f"[red]Erro de uso: {escape(e.format_message())}[/red]")
        return 2
    except (TransducerError, FileNotFoundError) as e:
        err_console.print(f"[red]Erro: {escape(str(e))}[/red]")
        return 1

    if artifact is not None:
        if config.out_path:
            path = save_artifact(artifact, config.out_path)
            err_console.print(f"[green]Salvo em {path}[/green]")
        else:
            click.echo(artifact, nl=False)
    return 0


# =============================================================================
# Comandos click
# =============================================================================
base_option = click.option("--base", type=click.IntRange(min=2, max=MAX_WORD), default=None, help="Base b")
mult_option = click.option("--mult", "multiplier", type=click.IntRange(min=1, max=MAX_WORD), default=None, help="Multiplicador m")
out_option = click.option("--out", "out_path", default=None, help="Arquivo de saída (padrão: stdout)")
workers_option = click.option("--workers", type=click.IntRange(min=1, max=1024), default=1, help="Processos paralelos")


def _format_option(subcommand: str):
    return click.option(
        "--format", "format",
        type=click.Choice(ALLOWED_FORMATS[subcommand]),
        default=ALLOWED_FORMATS[subcommand][0],
        help="Formato de saída",
    )


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", is_flag=True, help="Logs de depuração em stderr")
def cli(verbose):
    """Transdutores de multiplicação em base b."""
    configure_logging(verbose)


@cli.command("build")
@base_option
@mult_option
@_format_option("build")
@out_option
def build_command(base, multiplier, format, out_path):
    """Constrói T_{m,b} e lista as transições."""
    sys.exit(dispatch(RunConfig("build", base=base, multiplier=multiplier, format=format, out_path=out_path)))


@cli.command("multiply")
@base_option
@mult_option
@click.option("--value", default=None, help="Numeral em base b, dígito mais significativo primeiro")
@_format_option("multiply")
@out_option
def multiply_command(base, multiplier, value, format, out_path):
    """Multiplica um numeral executando o transdutor."""
    sys.exit(dispatch(RunConfig(
        "multiply", base=base, multiplier=multiplier, value=value, format=format, out_path=out_path
    )))


@cli.command("loop")
@base_option
@mult_option
@click.option("--algo", type=click.Choice(ALGORITHMS), default="both", help="Algoritmo de travessia")
@_format_option("loop")
@out_option
def loop_command(base, multiplier, algo, format, out_path):
    """Menor laço fechado em 0."""
    sys.exit(dispatch(RunConfig(
        "loop", base=base, multiplier=multiplier, algo=algo, format=format, out_path=out_path
    )))


@cli.command("sweep")
@click.option("--b-max", type=click.IntRange(min=2, max=MAX_WORD), default=None, help="Maior base")
@click.option("--m-max", type=click.IntRange(min=2, max=MAX_WORD), default=None, help="Maior multiplicador")
@workers_option
@_format_option("sweep")
@out_option
def sweep_command(b_max, m_max, workers, format, out_path):
    """Verifica as previsões do menor laço numa grade (b, m)."""
    sys.exit(dispatch(RunConfig(
        "sweep", b_max=b_max, m_max=m_max, workers=workers, format=format, out_path=out_path
    )))


@cli.command("quotient")
@base_option
@click.option("--digits", default=None, help="Dígitos permitidos, ex.: 0,1")
@mult_option
@click.option("--mult-max", type=click.IntRange(min=1, max=MAX_WORD), default=None, help="Decide todos os n em 1..N")
@workers_option
@_format_option("quotient")
@out_option
def quotient_command(base, digits, multiplier, mult_max, workers, format, out_path):
    """Decide se n pertence ao conjunto quociente Q(b; D)."""
    sys.exit(dispatch(RunConfig(
        "quotient", base=base, digits=digits, multiplier=multiplier, mult_max=mult_max,
        workers=workers, format=format, out_path=out_path
    )))


@cli.command("export-dot")
@base_option
@mult_option
@click.option("--highlight-loop", is_flag=True, help="Destaca o menor laço em 0")
@click.option("--style", "style_path", default=None, help="Arquivo YAML de estilo")
@out_option
def export_dot_command(base, multiplier, highlight_loop, style_path, out_path):
    """Exporta T_{m,b} como Graphviz DOT."""
    sys.exit(dispatch(RunConfig(
        "export-dot", base=base, multiplier=multiplier, highlight_loop=highlight_loop,
        style_path=style_path, out_path=out_path
    )))


if __name__ == '__main__':
    cli()
