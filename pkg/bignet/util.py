import shutil
import zlib
from collections.abc import Callable, Iterable
from functools import wraps
from typing import Any, Optional

import blinker
import click
import networkx as nx
import texttable
from networkx.algorithms.isomorphism import DiGraphMatcher

import bignet


class BignetError(ValueError):
    """Base class of all domain errors. The CLI turns these into exit code 1."""


class InterfaceMismatch(BignetError):
    """Two morphisms were composed along different interfaces."""


class SizeLimit(BignetError):
    """A search exceeded one of the caps in :data:`bignet.settings`."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}.")
        self.what = what
        self.cap = cap


def cap(key: str) -> int:
    """Look up a search cap from :data:`bignet.settings`."""
    return int(bignet.settings[key])


on_crosscheck = blinker.Signal()
"""
Sent by :func:`bignet.normal.eq_nets` whenever the rewiring BFS was consulted
next to the canonical comparison. Receivers get `canonical` and `bfs` keyword arguments.
"""

_colors = [
    "green",
    "yellow",
    "blue",
    "magenta",
    "cyan",
    "bright_green",
    "bright_yellow",
    "bright_blue",
    "bright_magenta",
    "bright_cyan",
]


def echo(namespace: str, message: str, err: bool = False) -> None:
    """
    Print to console with a namespace added in front.

    Args:
        namespace: The message 'category', e.g. the command name.
        message: The message.
        err: If `True`, print to stderr.
    """
    if err:
        color = "red"
    else:
        color = _colors[zlib.crc32(namespace.encode()) % len(_colors)]
    click.echo(click.style(f"[{namespace}] ", fg=color) + message, err=err)


def print_table(header: list[str], rows: Iterable[list[Any]], *, limit: Optional[int] = None) -> None:
    """
    Pretty-print rows as a table, showing at most `limit` rows.
    """
    rows = list(rows)
    table = texttable.Texttable(shutil.get_terminal_size((0, 0))[0])
    table.set_deco(table.BORDER | table.HEADER | table.VLINES)
    if rows:
        table.set_cols_align(["r" if isinstance(x, int) else "l" for x in rows[0]])
    shown = rows if limit is None else rows[:limit]
    table.add_rows([header] + shown)
    click.echo(table.draw())
    if limit is not None and len(rows) > limit:
        click.secho(f"(only first {limit} rows shown)", fg="yellow")


def isomorphic(g1: nx.DiGraph, g2: nx.DiGraph) -> bool:
    """
    Decide isomorphism of two labelled digraphs.

    Every vertex and every edge must carry a string attribute `label`; the bijection must preserve it.
    A Weisfeiler-Lehman color refinement hash rejects most non-isomorphic pairs before
    VF2 backtracking runs.
    """
    size_cap = cap("iso_size_cap")
    if max(len(g1), len(g2)) > size_cap:
        raise SizeLimit("isomorphism search", size_cap)
    if len(g1) != len(g2) or g1.number_of_edges() != g2.number_of_edges():
        return False
    if not g1:
        return True
    if _degree_profile(g1) != _degree_profile(g2):
        return False
    h1 = nx.weisfeiler_lehman_graph_hash(g1, node_attr="label", edge_attr="label")
    h2 = nx.weisfeiler_lehman_graph_hash(g2, node_attr="label", edge_attr="label")
    if h1 != h2:
        return False
    matcher = DiGraphMatcher(
        g1, g2,
        node_match=lambda a, b: a["label"] == b["label"],
        edge_match=lambda a, b: a["label"] == b["label"],
    )
    return matcher.is_isomorphic()


def _degree_profile(g: nx.DiGraph) -> list[tuple[str, int, int]]:
    return sorted((data["label"], g.in_degree(v), g.out_degree(v)) for v, data in g.nodes(data=True))


def with_signature(f: Callable) -> Callable:
    """Add a `--sig` option and pass the parsed signature to the command as `signature`."""

    @click.option(
        "--sig",
        type=click.Path(exists=True, dir_okay=False),
        envvar="BIGNET_SIGNATURE",
        required=True,
        help="Bigraphical signature file. Also sourced from $BIGNET_SIGNATURE.",
    )
    @wraps(f)
    def wrapper(sig, **kwds):
        from bignet import fileformats
        try:
            signature = fileformats.parse_signature_file(sig)
        except BignetError as e:
            raise click.UsageError(f"{sig}: {e}")
        return f(signature=signature, **kwds)

    return wrapper


def with_caps(f: Callable) -> Callable:
    """Add options overriding the search caps in :data:`bignet.settings`."""

    @click.option("--switching-cap", type=int, envvar="BIGNET_SWITCHING_CAP",
                  default=lambda: bignet.settings["switching_cap"], show_default="2**20",
                  help="Maximum number of switchings to visit. Also sourced from $BIGNET_SWITCHING_CAP.")
    @click.option("--state-cap", type=int, envvar="BIGNET_STATE_CAP",
                  default=lambda: bignet.settings["rewiring_state_cap"], show_default="20000",
                  help="Maximum number of rewiring states to visit. Also sourced from $BIGNET_STATE_CAP.")
    @wraps(f)
    def wrapper(switching_cap, state_cap, **kwds):
        bignet.settings["switching_cap"] = switching_cap
        bignet.settings["rewiring_state_cap"] = state_cap
        return f(**kwds)

    return wrapper


def exit_codes(namespace: str) -> Callable[[Callable], Callable]:
    """
    Map domain errors to the exit code contract:
    parse errors exit with 2 (as click usage errors do), other domain errors with 1.
    Commands signal a checked-false result by returning `False`.
    """

    def decorator(f):
        @wraps(f)
        def wrapper(**kwds):
            from bignet.fileformats import FileFormatError
            from bignet.formula import FormulaSyntaxError
            ctx = click.get_current_context()
            try:
                ok = f(**kwds)
            except (FileFormatError, FormulaSyntaxError) as e:
                raise click.UsageError(str(e))
            except BignetError as e:
                echo(namespace, f"{type(e).__name__}: {e}", err=True)
                ctx.exit(1)
            else:
                if ok is False:
                    ctx.exit(1)

        return wrapper

    return decorator
