"""
Morphisms of the free symmetric monoidal closed category over a bigraphical theory, drawn as nets:
cells labelled by operations, and wires between the leaves ("ports") of the formula

    (dom ⊗ ⊗_c (α_c ⊸ β_c)) ⊸ cod

Wires run from negative to positive ports.
"""
import enum
import functools
import re
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple, Optional

import networkx as nx

from bignet.formula import (
    Formula, I, LeafPath, Polarity, Tensor, UNIT, UnresolvedPath, assemble_morphism_formula, factor_path, leaf_label,
    leaves, local_polarity, print_formula,
)
from bignet.theory import SmcOperation, TheoryTK
from bignet.util import BignetError, InterfaceMismatch

CellInstance = SmcOperation


class InvalidPortRef(BignetError):
    pass


class PolarityViolation(BignetError):
    pass


class SortBijectionViolation(BignetError):
    def __init__(self, sort: str, message: str):
        super().__init__(f"{sort}: {message}")
        self.sort = sort


class DanglingIPort(BignetError):
    pass


class NonTKOperation(BignetError):
    def __init__(self, name: str):
        super().__init__(f"Operation {name!r} is not part of the theory.")
        self.name = name


class Site(enum.Enum):
    Dom = "dom"
    CellDom = "celldom"
    CellCod = "cellcod"
    Cod = "cod"


@functools.total_ordering
@dataclass(frozen=True)
class PortRef:
    """
    One leaf occurrence: a site (domain, codomain, or one side of a cell) plus a path.

    PortRefs sort in the left-to-right leaf order of the assembled morphism formula.
    """
    site: Site
    path: LeafPath = ""
    cell: Optional[int] = None

    def _key(self):
        if self.site is Site.Dom:
            return 0, 0, 0, self.path
        if self.site is Site.Cod:
            return 2, 0, 0, self.path
        return 1, self.cell, 0 if self.site is Site.CellDom else 1, self.path

    def __lt__(self, other: "PortRef") -> bool:
        return self._key() < other._key()

    def __str__(self):
        if self.site is Site.Dom:
            return f"dom/{self.path}"
        if self.site is Site.Cod:
            return f"cod/{self.path}"
        side = "dom" if self.site is Site.CellDom else "cod"
        return f"cell:{self.cell}:{side}/{self.path}"

    def __repr__(self):
        return f"PortRef({self})"

    def shift(self, offset: int) -> "PortRef":
        if self.cell is None:
            return self
        return PortRef(self.site, self.path, self.cell + offset)


def dom(path: LeafPath = "") -> PortRef:
    return PortRef(Site.Dom, path)


def cod(path: LeafPath = "") -> PortRef:
    return PortRef(Site.Cod, path)


def cell_dom(i: int, path: LeafPath = "") -> PortRef:
    return PortRef(Site.CellDom, path, i)


def cell_cod(i: int, path: LeafPath = "") -> PortRef:
    return PortRef(Site.CellCod, path, i)


_port_ref = re.compile(r"^(?:(dom|cod)|cell:(\d+):(dom|cod))/([LR]*)$")


def parse_port_ref(text: str) -> PortRef:
    """Parse `dom/<path>`, `cod/<path>`, `cell:<i>:dom/<path>` or `cell:<i>:cod/<path>`."""
    m = _port_ref.match(text.strip())
    if not m:
        raise InvalidPortRef(f"Malformed port reference: {text!r}")
    outer, index, side, path = m.groups()
    if outer:
        return PortRef(Site(outer), path)
    return PortRef(Site.CellDom if side == "dom" else Site.CellCod, path, int(index))


Wire = tuple[PortRef, PortRef]


class Port(NamedTuple):
    ref: PortRef
    label: str
    polarity: Polarity


@dataclass(frozen=True)
class GenericNet:
    """
    A morphism `dom → cod` with explicit cells and a set of `(source, target)` wires.
    Structural cells (`|`, `0`, `nu`, `c`, `w`) are ordinary cells here.
    """
    dom: Formula
    cod: Formula
    cells: tuple[CellInstance, ...] = ()
    wires: frozenset[Wire] = frozenset()

    @functools.cached_property
    def formula(self) -> Formula:
        """The assembled morphism formula whose leaves are this net's ports."""
        return assemble_morphism_formula(self.dom, [(c.dom, c.cod) for c in self.cells], self.cod)

    @functools.cached_property
    def ports(self) -> tuple[Port, ...]:
        """All ports in PortRef order."""
        refs = [dom(p) for p, _ in leaves(self.dom)]
        for i, c in enumerate(self.cells):
            refs.extend(cell_dom(i, p) for p, _ in leaves(c.dom))
            refs.extend(cell_cod(i, p) for p, _ in leaves(c.cod))
        refs.extend(cod(p) for p, _ in leaves(self.cod))
        return tuple(
            Port(r, self.label(r), local_polarity(self.formula, self.embed(r)))
            for r in refs
        )

    def site_formula(self, ref: PortRef) -> Formula:
        if ref.site is Site.Dom:
            return self.dom
        if ref.site is Site.Cod:
            return self.cod
        if ref.cell is None or not 0 <= ref.cell < len(self.cells):
            raise InvalidPortRef(f"{ref}: no such cell")
        c = self.cells[ref.cell]
        return c.dom if ref.site is Site.CellDom else c.cod

    def label(self, ref: PortRef) -> str:
        try:
            return leaf_label(self.site_formula(ref), ref.path)
        except UnresolvedPath as e:
            raise InvalidPortRef(f"{ref}: {e}")

    def embed(self, ref: PortRef) -> LeafPath:
        """Path of `ref` inside :attr:`formula`."""
        if ref.site is Site.Dom:
            return ("LL" if self.cells else "L") + ref.path
        if ref.site is Site.Cod:
            return "R" + ref.path
        self.site_formula(ref)
        slot = "LR" + factor_path(ref.cell, len(self.cells))
        return slot + ("L" if ref.site is Site.CellDom else "R") + ref.path

    def polarity(self, ref: PortRef) -> Polarity:
        self.label(ref)
        return local_polarity(self.formula, self.embed(ref))

    def wires_from(self, source: PortRef) -> list[PortRef]:
        return sorted(t for s, t in self.wires if s == source)

    def sorted_wires(self) -> list[Wire]:
        return sorted(self.wires)

    def __str__(self):
        return f"{print_formula(self.dom)} → {print_formula(self.cod)} ({len(self.cells)} cells, {len(self.wires)} wires)"


def global_polarity(n: GenericNet, p: PortRef) -> Polarity:
    """
    Sign of port `p` inside the assembled morphism formula of `n`.

    Args:
        n: The net.
        p: A port of `n`; :class:`InvalidPortRef` if it does not resolve.
    """
    return n.polarity(p)


def validate_shape(n: GenericNet) -> None:
    """
    Check the wiring rules: wires go from negative to positive ports,
    `t` and `v` wires form a bijection per sort, and every negative `I` port
    is the source of exactly one wire.
    """
    for s, t in n.sorted_wires():
        ls, lt = n.label(s), n.label(t)
        if n.polarity(s) is not Polarity.Negative:
            raise PolarityViolation(f"wire source {s} is a positive port")
        if n.polarity(t) is not Polarity.Positive:
            raise PolarityViolation(f"wire target {t} is a negative port")
        if ls != UNIT and ls != lt:
            raise SortBijectionViolation(ls, f"wire {s} -> {t} connects a {ls} port to a {lt} port")

    outgoing = Counter(s for s, _ in n.wires)
    incoming = Counter(t for s, t in n.wires if n.label(s) != UNIT)
    for port in n.ports:
        if port.polarity is Polarity.Negative:
            if port.label == UNIT:
                if outgoing[port.ref] != 1:
                    raise DanglingIPort(f"negative unit port {port.ref} is the source of {outgoing[port.ref]} wires")
            elif outgoing[port.ref] != 1:
                raise SortBijectionViolation(
                    port.label, f"negative port {port.ref} is the source of {outgoing[port.ref]} wires")
        elif port.label != UNIT and incoming[port.ref] != 1:
            raise SortBijectionViolation(
                port.label, f"positive port {port.ref} is the target of {incoming[port.ref]} wires")


def check_operations(n: GenericNet, theory: TheoryTK) -> None:
    """Raise :class:`NonTKOperation` unless every cell of `n` is an operation of `theory`."""
    for c in n.cells:
        if c.name not in theory or theory[c.name] != c:
            raise NonTKOperation(c.name)


def make_net(
        dom: Formula,
        cod: Formula,
        cells: Iterable[CellInstance] = (),
        wires: Iterable[Wire] = (),
        *,
        validate: bool = True,
) -> GenericNet:
    n = GenericNet(dom, cod, tuple(cells), frozenset(wires))
    if validate:
        validate_shape(n)
    return n


def identity_net(a: Formula) -> GenericNet:
    """The identity on `a`: every domain leaf is wired to the codomain leaf at the same path."""
    n = GenericNet(a, a)
    wires = []
    for p, _ in leaves(a):
        if n.polarity(dom(p)) is Polarity.Negative:
            wires.append((dom(p), cod(p)))
        else:
            wires.append((cod(p), dom(p)))
    return GenericNet(a, a, (), frozenset(wires))


def empty_net() -> GenericNet:
    return identity_net(I)


def _readdress(ref: PortRef, side: str, offset: int) -> PortRef:
    if ref.site in (Site.Dom, Site.Cod):
        return PortRef(ref.site, side + ref.path)
    return ref.shift(offset)


def tensor_nets(f: GenericNet, g: GenericNet) -> GenericNet:
    """`f ⊗ g`: the two nets side by side, `f`'s cells first."""
    offset = len(f.cells)
    wires = {(_readdress(s, "L", 0), _readdress(t, "L", 0)) for s, t in f.wires}
    wires |= {(_readdress(s, "R", offset), _readdress(t, "R", offset)) for s, t in g.wires}
    return GenericNet(Tensor(f.dom, g.dom), Tensor(f.cod, g.cod), f.cells + g.cells, frozenset(wires))


@dataclass(frozen=True)
class _Interface:
    path: LeafPath


def compose_nets(g: GenericNet, f: GenericNet) -> GenericNet:
    """
    `g ∘ f`: plug the codomain of `f` into the domain of `g`.

    Every wire chain through the shared interface is followed to its far end,
    so `I` wires that targeted an interface leaf end up at a port of `f` or `g`.
    """
    if f.cod != g.dom:
        raise InterfaceMismatch(
            f"cannot compose: codomain {print_formula(f.cod)} differs from domain {print_formula(g.dom)}")
    offset = len(f.cells)

    def from_f(ref: PortRef):
        return _Interface(ref.path) if ref.site is Site.Cod else ref

    def from_g(ref: PortRef):
        return _Interface(ref.path) if ref.site is Site.Dom else ref.shift(offset)

    wires = [(from_f(s), from_f(t)) for s, t in f.wires]
    wires += [(from_g(s), from_g(t)) for s, t in g.wires]
    onward = {s: t for s, t in wires if isinstance(s, _Interface)}

    def chase(ref):
        steps = 0
        while isinstance(ref, _Interface):
            if ref not in onward or steps > len(onward):
                raise BignetError(f"wire chain through interface leaf {ref.path!r} does not leave the interface")
            ref = onward[ref]
            steps += 1
        return ref

    composed = frozenset((s, chase(t)) for s, t in wires if not isinstance(s, _Interface))
    return GenericNet(f.dom, g.cod, f.cells + g.cells, composed)


def to_digraph(n: GenericNet, *, with_unit_wires: bool = True) -> nx.DiGraph:
    """
    The net as a labelled digraph: one vertex per cell and per port, cell → port edges,
    and source → target wire edges. Domain and codomain ports carry unique labels,
    so isomorphisms fix the interface and permute cells only.
    """
    g = nx.DiGraph()
    for i, c in enumerate(n.cells):
        g.add_node(("cell", i), label=f"op:{c.name}")
    for port in n.ports:
        ref = port.ref
        g.add_node(ref, label=f"{ref.site.value}:{ref.path}")
        if ref.cell is not None:
            g.add_edge(("cell", ref.cell), ref, label="has")
    for s, t in n.wires:
        if with_unit_wires or n.label(s) != UNIT:
            g.add_edge(s, t, label="wire")
    return g


def same_cells(f: GenericNet, g: GenericNet) -> bool:
    """Whether `f` and `g` have the same interface and the same multiset of cell operations."""
    return (
        f.dom == g.dom and f.cod == g.cod
        and Counter(c.name for c in f.cells) == Counter(c.name for c in g.cells)
    )


def positive_ports(n: GenericNet) -> Iterator[PortRef]:
    return (p.ref for p in n.ports if p.polarity is Polarity.Positive)


def unit_sources(n: GenericNet) -> list[PortRef]:
    """Negative `I` ports, in PortRef order."""
    return [p.ref for p in n.ports if p.polarity is Polarity.Negative and p.label == UNIT]
