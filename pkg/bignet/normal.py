"""
Normal forms of nets modulo the equations of the bigraphical theory.

A :class:`NormalNet` keeps only the logical cells and the `nu` cells that feed at least one
consumer. The `t` wiring through `|` and `0` cells becomes the `t_link` mapping, the `v`
wiring through `c` and `w` cells becomes the `v_link` mapping, and `I` wires are dropped.
:func:`expand` rebuilds a generic net with canonical structural cells and unit wiring.
"""
import itertools
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple, Optional

import networkx as nx

from bignet.correctness import has_switching_cycle, is_correct_fast, rewiring_equivalent
from bignet.formula import UNIT, Formula, LeafPath, Lolli, Polarity, leaf_label, subformula
from bignet.net import (
    CellInstance, GenericNet, NonTKOperation, PortRef, Wire, cell_cod, cell_dom, check_operations, same_cells,
    to_digraph, unit_sources,
)
from bignet.theory import CONTRACT, PAR, STRUCTURAL_OPERATIONS, WEAKEN, ZERO, OpKind, TheoryTK
from bignet.util import BignetError, SizeLimit, cap, isomorphic, on_crosscheck

Link = tuple[PortRef, PortRef]


class MalformedNormalNet(BignetError):
    pass


@dataclass(frozen=True)
class NormalNet:
    """
    Args:
        dom: Domain formula.
        cod: Codomain formula.
        cells: Logical and `nu` cells.
        t_link: `(negative t port, positive t port)` pairs, one per negative `t` port.
        v_link: `(consumer, producer)` pairs, one per positive `v` port.
    """
    dom: Formula
    cod: Formula
    cells: tuple[CellInstance, ...] = ()
    t_link: tuple[Link, ...] = ()
    v_link: tuple[Link, ...] = ()

    @property
    def skeleton(self) -> GenericNet:
        """The cells of this net without any wiring; ports are addressed relative to it."""
        return GenericNet(self.dom, self.cod, self.cells)


def make_normal_net(
        dom: Formula,
        cod: Formula,
        cells: Iterable[CellInstance],
        t_link: Iterable[Link],
        v_link: Iterable[Link],
) -> NormalNet:
    m = NormalNet(dom, cod, tuple(cells), tuple(sorted(t_link)), tuple(sorted(v_link)))
    validate_normal(m)
    return m


def validate_normal(m: NormalNet) -> None:
    skeleton = m.skeleton
    for c in m.cells:
        if c.kind not in (OpKind.Logical, OpKind.Nu):
            raise MalformedNormalNet(f"structural cell {c.name!r} in a normal net")

    def ports(label: str, polarity: Polarity) -> set[PortRef]:
        return {p.ref for p in skeleton.ports if p.label == label and p.polarity is polarity}

    for name, link, keys, values in (
            ("t_link", m.t_link, ports("t", Polarity.Negative), ports("t", Polarity.Positive)),
            ("v_link", m.v_link, ports("v", Polarity.Positive), ports("v", Polarity.Negative)),
    ):
        domain = [k for k, _ in link]
        if len(domain) != len(set(domain)) or set(domain) != keys:
            raise MalformedNormalNet(f"{name} must map each of {sorted(map(str, keys))} exactly once")
        for k, v in link:
            if v not in values:
                raise MalformedNormalNet(f"{name}: {k} is linked to {v}, which is not a {name[0]} port of the right sign")

    producers = {v for _, v in m.v_link}
    for i, c in enumerate(m.cells):
        if c.kind is OpKind.Nu and cell_cod(i) not in producers:
            raise MalformedNormalNet(f"nu cell {i} has no consumer")


def normalize(n: GenericNet, theory: Optional[TheoryTK] = None) -> NormalNet:
    """
    Contract `|` cells, delete `0` cells, collapse trees of `c` and `w` cells,
    delete `nu` cells without consumers, and drop `I` wires.

    Args:
        n: A correct net.
        theory: If given, every cell must be one of its operations.
    """
    if theory is not None:
        check_operations(n, theory)
    for c in n.cells:
        if c.kind is not OpKind.Logical and STRUCTURAL_OPERATIONS.get(c.name) != c:
            raise NonTKOperation(c.name)

    target_of = {s: t for s, t in n.wires if n.label(s) != UNIT}
    source_of = {t: s for s, t in target_of.items()}

    def structural(ref: PortRef, *names: str) -> bool:
        return ref.cell is not None and n.cells[ref.cell].name in names

    def follow_t(s: PortRef) -> PortRef:
        t = target_of[s]
        while structural(t, PAR):
            t = target_of[cell_cod(t.cell)]
        return t

    def follow_v(consumer: PortRef) -> PortRef:
        s = source_of[consumer]
        while structural(s, CONTRACT):
            s = source_of[cell_dom(s.cell)]
        return s

    t_link = []
    v_link = []
    for port in n.ports:
        if structural(port.ref, PAR, ZERO, CONTRACT, WEAKEN):
            continue
        if port.label == "t" and port.polarity is Polarity.Negative:
            t_link.append((port.ref, follow_t(port.ref)))
        elif port.label == "v" and port.polarity is Polarity.Positive:
            v_link.append((port.ref, follow_v(port.ref)))

    producers = {p for _, p in v_link}
    kept = [
        i for i, c in enumerate(n.cells)
        if c.kind is OpKind.Logical or (c.kind is OpKind.Nu and cell_cod(i) in producers)
    ]
    index = {old: new for new, old in enumerate(kept)}

    def renumber(ref: PortRef) -> PortRef:
        if ref.cell is None:
            return ref
        return PortRef(ref.site, ref.path, index[ref.cell])

    return NormalNet(
        n.dom, n.cod,
        tuple(n.cells[i] for i in kept),
        tuple(sorted((renumber(a), renumber(b)) for a, b in t_link)),
        tuple(sorted((renumber(a), renumber(b)) for a, b in v_link)),
    )


def _binder_target(formula: Formula, position: LeafPath) -> Optional[LeafPath]:
    """The right leaf of the innermost `⊸` whose left side contains `position`."""
    for depth in range(len(position) - 1, -1, -1):
        if position[depth] != "L":
            continue
        vertex = subformula(formula, position[:depth])
        if isinstance(vertex, Lolli):
            right = position[:depth] + "R"
            try:
                leaf_label(formula, right)
            except BignetError:
                return None
            return right
    return None


def expand(m: NormalNet) -> GenericNet:
    """
    Rebuild a generic net from a normal one.

    Each producer gets a chain of `c` cells over its consumers in PortRef order
    (a single `w` cell when it has none), each positive `t` port a chain of `|` cells over
    its sources (a `0` cell when it has none). Negative `I` ports are wired to the `t` port
    right of their binder when that keeps the net correct, otherwise to the first positive
    port in PortRef order that does.
    """
    skeleton = m.skeleton
    cells = list(m.cells)
    wires: list[Wire] = []
    # unit sources introduced by w cells sit where their producer was
    positions: dict[PortRef, PortRef] = {}

    def add_cell(name: str) -> int:
        cells.append(STRUCTURAL_OPERATIONS[name])
        return len(cells) - 1

    consumers = defaultdict(list)
    for consumer, producer in m.v_link:
        consumers[producer].append(consumer)
    sources = defaultdict(list)
    for s, t in m.t_link:
        sources[t].append(s)

    for port in skeleton.ports:
        if port.label != "v" or port.polarity is not Polarity.Negative:
            continue
        fan = sorted(consumers[port.ref])
        if not fan:
            w = add_cell(WEAKEN)
            wires.append((port.ref, cell_dom(w)))
            positions[cell_cod(w)] = port.ref
            continue
        current = port.ref
        for consumer in fan[:-1]:
            c = add_cell(CONTRACT)
            wires.append((current, cell_dom(c)))
            wires.append((cell_cod(c, "L"), consumer))
            current = cell_cod(c, "R")
        wires.append((current, fan[-1]))

    for port in skeleton.ports:
        if port.label != "t" or port.polarity is not Polarity.Positive:
            continue
        fan = sorted(sources[port.ref])
        if not fan:
            z = add_cell(ZERO)
            wires.append((cell_cod(z), port.ref))
            continue
        acc = fan[0]
        for s in fan[1:]:
            p = add_cell(PAR)
            wires.append((acc, cell_dom(p, "L")))
            wires.append((s, cell_dom(p, "R")))
            acc = cell_cod(p)
        wires.append((acc, port.ref))

    net = GenericNet(m.dom, m.cod, tuple(cells), frozenset(wires))
    return _wire_units(net, positions)


def _wire_units(net: GenericNet, positions: dict[PortRef, PortRef]) -> GenericNet:
    units = unit_sources(net)
    if not units:
        return net
    positive = [p for p in net.ports if p.polarity is Polarity.Positive]
    ordered = [p.ref for p in positive if p.label == "t"] + [p.ref for p in positive if p.label != "t"]
    by_path = {net.embed(p.ref): p for p in positive}

    candidates = []
    for u in units:
        preferred = _binder_target(net.formula, net.embed(positions.get(u, u)))
        first = [by_path[preferred].ref] if preferred in by_path else []
        candidates.append(first + [r for r in ordered if r not in first])

    def attempt(choice) -> GenericNet:
        return GenericNet(net.dom, net.cod, net.cells, net.wires | set(zip(units, choice)))

    preferred = attempt([c[0] for c in candidates])
    if is_correct_fast(preferred):
        return preferred
    try:
        hopeless = has_switching_cycle(net)
    except SizeLimit:
        hopeless = False
    if hopeless:
        raise MalformedNormalNet("a switching has a cycle whatever the unit ports are wired to")

    limit = cap("unit_search_cap")
    for tried, choice in enumerate(itertools.product(*candidates)):
        if tried >= limit:
            raise SizeLimit("unit wiring search", limit)
        wired = attempt(choice)
        if is_correct_fast(wired):
            return wired
    raise MalformedNormalNet("no correct wiring of the unit ports exists")


def normal_digraph(m: NormalNet) -> nx.DiGraph:
    g = to_digraph(m.skeleton)
    g.add_edges_from(m.t_link, label="t")
    g.add_edges_from(m.v_link, label="v")
    return g


class Equality(NamedTuple):
    equal: bool
    method: str  # "canonical" or "bfs"

    def __bool__(self):
        return self.equal


def eq_normal(a: NormalNet, b: NormalNet) -> bool:
    """Whether two normal nets are equal up to a relabelling of their cells."""
    if a.dom != b.dom or a.cod != b.cod or len(a.cells) != len(b.cells):
        return False
    return isomorphic(normal_digraph(a), normal_digraph(b))


def eq_nets(f: GenericNet, g: GenericNet, theory: Optional[TheoryTK] = None) -> Equality:
    """
    Decide equality of two correct nets in the free category over the bigraphical theory.

    The normal forms are compared up to isomorphism. Small nets are also compared by
    the rewiring search; the result is announced through
    :data:`bignet.util.on_crosscheck`, and `method` is `"bfs"` when only the search found them equal.
    """
    canonical = eq_normal(normalize(f, theory), normalize(g, theory))
    small = cap("bfs_crosscheck_cells")
    if len(f.cells) <= small and len(g.cells) <= small and same_cells(f, g):
        bfs = rewiring_equivalent(f, g)
        on_crosscheck.send(eq_nets, canonical=canonical, bfs=bfs)
        if bfs and not canonical:
            return Equality(True, "bfs")
    return Equality(canonical, "canonical")
