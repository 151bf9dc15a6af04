"""
Correctness of nets: every switching of the classical image must be acyclic and connected.

:func:`is_correct_oracle` enumerates switchings; :func:`is_correct_fast` contracts the
switching graph with a union-find and decides the same criterion in polynomial time.
:func:`rewiring_equivalent` searches the equivalence generated by moving `I` wires.
"""
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx

from bignet.formula import (
    UNIT, Choice, CTensor, Switching, count_switchings, enumerate_switchings, internal_vertices, par_paths, to_classical,
)
from bignet.net import GenericNet, Wire, positive_ports, same_cells, to_digraph
from bignet.util import SizeLimit, cap, isomorphic


@dataclass(frozen=True)
class SwitchingGraph:
    """
    The undirected graph underlying all switchings of a net, vertices named by their path
    in the assembled formula. `fixed` holds the tensor edges and the wires, `pars` one
    `(par, left child, right child)` triple per ⅋ vertex in in-order position.
    """
    vertices: tuple[str, ...]
    fixed: tuple[tuple[str, str], ...]
    pars: tuple[tuple[str, str, str], ...]


def switching_graph(n: GenericNet) -> SwitchingGraph:
    classical = to_classical(n.formula)
    vertices = [path for path, _ in internal_vertices(classical)]
    fixed = []
    for path, vertex in internal_vertices(classical):
        if isinstance(vertex, CTensor):
            fixed.append((path, path + "L"))
            fixed.append((path, path + "R"))
    vertices.extend(n.embed(p.ref) for p in n.ports)
    fixed.extend((n.embed(s), n.embed(t)) for s, t in sorted(n.wires))
    pars = tuple((p, p + "L", p + "R") for p in par_paths(classical))
    return SwitchingGraph(tuple(vertices), tuple(fixed), pars)


class SwitchingReport(NamedTuple):
    switching: Switching
    vertices: int
    edges: int
    connected: bool
    acyclic: bool


def _check_switching_cap(n: GenericNet) -> None:
    count = count_switchings(to_classical(n.formula))
    limit = cap("switching_cap")
    if count > limit:
        raise SizeLimit(f"{count} switchings", limit)


def switching_reports(n: GenericNet) -> Iterator[SwitchingReport]:
    """
    Yield one report per switching, in :func:`bignet.formula.enumerate_switchings` order.

    The fixed edges are contracted once; each switching then only adds its ⅋ edges
    to a union-find over the resulting classes. When the wiring rules hold, every
    switching has one more vertex than edges, so it is connected iff it is acyclic.
    """
    _check_switching_cap(n)
    graph = switching_graph(n)
    base = nx.utils.UnionFind(graph.vertices)
    base_cycle = False
    for a, b in graph.fixed:
        if base[a] == base[b]:
            base_cycle = True
        else:
            base.union(a, b)
    roots = sorted({base[v] for v in graph.vertices})
    index = {r: i for i, r in enumerate(roots)}
    choices = [
        ((index[base[p]], index[base[left]]), (index[base[p]], index[base[right]]))
        for p, left, right in graph.pars
    ]
    n_vertices = len(graph.vertices)
    n_edges = len(graph.fixed) + len(graph.pars)

    for switching in enumerate_switchings(to_classical(n.formula)):
        uf = nx.utils.UnionFind(range(len(roots)))
        merges = 0
        acyclic = not base_cycle
        for choice, (keep_left, keep_right) in zip(switching, choices):
            a, b = keep_left if choice is Choice.KeepLeft else keep_right
            if uf[a] == uf[b]:
                acyclic = False
            else:
                uf.union(a, b)
                merges += 1
        yield SwitchingReport(switching, n_vertices, n_edges, len(roots) - merges == 1, acyclic)


def has_switching_cycle(n: GenericNet) -> bool:
    """
    Whether some switching of `n` has a cycle. `n` may lack some of its `I` wires:
    adding wires never removes a cycle, so a net with one has no correct completion.
    """
    return not all(r.acyclic for r in switching_reports(n))


def is_correct_oracle(n: GenericNet) -> bool:
    """Decide correctness by visiting every switching."""
    return all(r.connected and r.acyclic for r in switching_reports(n))


def is_correct_fast(n: GenericNet) -> bool:
    """
    Decide correctness by contraction.

    Fixed edges are contracted first (a cycle among them is fatal). A ⅋ vertex is
    contracted into its children once both children lie in one class; if the ⅋ vertex
    already shares a class with a child, some switching has a cycle. The net is
    correct iff all ⅋ vertices contract and a single class remains.
    """
    graph = switching_graph(n)
    uf = nx.utils.UnionFind(graph.vertices)
    for a, b in graph.fixed:
        if uf[a] == uf[b]:
            return False
        uf.union(a, b)

    pending = list(graph.pars)
    progress = True
    while pending and progress:
        progress = False
        stuck = []
        for p, left, right in pending:
            rp, rl, rr = uf[p], uf[left], uf[right]
            if rp == rl or rp == rr:
                return False
            if rl == rr:
                uf.union(p, left)
                progress = True
            else:
                stuck.append((p, left, right))
        pending = stuck
    if pending:
        return False
    return len({uf[v] for v in graph.vertices}) == 1


def _with_wires(n: GenericNet, wires: frozenset[Wire]) -> GenericNet:
    return GenericNet(n.dom, n.cod, n.cells, wires)


def rewiring_equivalent(f: GenericNet, g: GenericNet) -> bool:
    """
    Whether `g` is reachable from `f` by moving `I` wires one at a time, keeping the net
    correct after every move, up to a relabelling of cells.

    Raises :class:`bignet.util.SizeLimit` after `rewiring_state_cap` states.
    """
    if not same_cells(f, g):
        return False
    target = to_digraph(g)
    if not isomorphic(to_digraph(f, with_unit_wires=False), to_digraph(g, with_unit_wires=False)):
        return False

    def reached(wires: frozenset[Wire]) -> bool:
        return wires == g.wires or isomorphic(to_digraph(_with_wires(f, wires)), target)

    targets = list(positive_ports(f))
    limit = cap("rewiring_state_cap")
    seen = {f.wires}
    queue = deque([f.wires])
    while queue:
        wires = queue.popleft()
        if reached(wires):
            return True
        for s, t in sorted(wires):
            if f.label(s) != UNIT:
                continue
            for t2 in targets:
                if t2 == t:
                    continue
                moved = (wires - {(s, t)}) | {(s, t2)}
                if moved in seen or not is_correct_fast(_with_wires(f, moved)):
                    continue
                seen.add(moved)
                if len(seen) > limit:
                    raise SizeLimit("rewiring search", limit)
                queue.append(moved)
    return False
