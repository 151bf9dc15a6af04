"""
Abstract binding bigraphs: a place graph (a forest of nodes over sites and roots)
and a link graph (ports and inner names linked to edges and outer names),
sharing one set of nodes.
"""
import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Optional, Union

import networkx as nx

from bignet.theory import Control
from bignet.util import BignetError, InterfaceMismatch, isomorphic

Name = str
NodeId = str
EdgeId = str


class MalformedBigraph(BignetError):
    pass


class ArityMismatch(BignetError):
    pass


class ParentCycle(BignetError):
    pass


class AtomicParent(BignetError):
    pass


class BindingRuleViolation(BignetError):
    def __init__(self, port: "Port"):
        super().__init__(f"binding port {port} is not linked to an edge")
        self.port = port


class ScopeRuleViolation(BignetError):
    def __init__(self, binder, peer):
        super().__init__(f"{peer} is a peer of binder {binder} but is not located below it")
        self.binder = binder
        self.peer = peer


@dataclass(frozen=True)
class Interface:
    """
    `width` sites or roots, and names each located at one of them or global (`None`).
    """
    width: int = 0
    loc: tuple[tuple[Name, Optional[int]], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "loc", tuple(sorted(self.loc, key=lambda pair: pair[0])))
        names = [x for x, _ in self.loc]
        if len(set(names)) != len(names):
            raise MalformedBigraph(f"interface names must be distinct: {names}")
        for x, i in self.loc:
            if not x:
                raise MalformedBigraph("names must not be empty")
            if i is not None and not 0 <= i < self.width:
                raise MalformedBigraph(f"name {x!r} is located at {i}, outside of width {self.width}")

    @property
    def names(self) -> list[Name]:
        return [x for x, _ in self.loc]

    def locality(self, name: Name) -> Optional[int]:
        return dict(self.loc)[name]

    def global_names(self) -> list[Name]:
        return [x for x, i in self.loc if i is None]

    def local_names(self, i: int) -> list[Name]:
        return [x for x, j in self.loc if j == i]

    def __str__(self):
        names = ", ".join(x if i is None else f"{x}@{i}" for x, i in self.loc)
        return f"({self.width}, {{{names}}})"


def interface(width: int, loc: Optional[Mapping[Name, Optional[int]]] = None) -> Interface:
    return Interface(width, tuple((loc or {}).items()))


@dataclass(frozen=True, order=True)
class Place:
    """A site, a node or a root."""
    kind: str  # "site", "node" or "root"
    key: Union[int, NodeId]

    def __str__(self):
        return f"{self.kind} {self.key}"


def site(i: int) -> Place:
    return Place("site", i)


def node(v: NodeId) -> Place:
    return Place("node", v)


def root(j: int) -> Place:
    return Place("root", j)


@dataclass(frozen=True, order=True)
class Port:
    node: NodeId
    binding: bool
    index: int

    def __str__(self):
        return f"{self.node}.{'bind' if self.binding else 'free'}{self.index}"


@dataclass(frozen=True, order=True)
class InnerName:
    name: Name

    def __str__(self):
        return f"inner {self.name}"


@dataclass(frozen=True, order=True)
class Edge:
    id: EdgeId

    def __str__(self):
        return f"edge {self.id}"


@dataclass(frozen=True, order=True)
class OuterName:
    name: Name

    def __str__(self):
        return f"outer {self.name}"


Point = Union[Port, InnerName]
LinkTarget = Union[Edge, OuterName]


def ports_of(v: NodeId, k: Control) -> list[Port]:
    return [Port(v, True, j) for j in range(k.binding)] + [Port(v, False, j) for j in range(k.free)]


@dataclass(frozen=True)
class PlaceGraph:
    width_in: int
    width_out: int
    ctrl: Mapping[NodeId, Control]
    prnt: Mapping[Place, Place]

    def validate(self) -> None:
        expected = {site(i) for i in range(self.width_in)} | {node(v) for v in self.ctrl}
        if set(self.prnt) != expected:
            raise MalformedBigraph("the parent map must be defined on exactly the sites and nodes")
        for child, parent in self.prnt.items():
            if parent.kind == "site" or (parent.kind == "node" and parent.key not in self.ctrl):
                raise MalformedBigraph(f"{child} has invalid parent {parent}")
            if parent.kind == "root" and not 0 <= parent.key < self.width_out:
                raise MalformedBigraph(f"{child} has parent {parent}, outside of width {self.width_out}")
            if parent.kind == "node" and self.ctrl[parent.key].atomic:
                raise AtomicParent(f"{child} is placed inside atomic node {parent.key}")
        for v in self.ctrl:
            seen = {node(v)}
            p = self.prnt[node(v)]
            while p.kind == "node":
                if p in seen:
                    raise ParentCycle(f"node {v} is its own ancestor")
                seen.add(p)
                p = self.prnt[p]


@dataclass(frozen=True)
class LinkGraph:
    inner: tuple[Name, ...]
    outer: tuple[Name, ...]
    ctrl: Mapping[NodeId, Control]
    edges: frozenset[EdgeId]
    link: Mapping[Point, LinkTarget]

    def validate(self) -> None:
        ports = {p for v, k in self.ctrl.items() for p in ports_of(v, k)}
        linked_ports = {p for p in self.link if isinstance(p, Port)}
        if linked_ports != ports:
            extra = sorted(map(str, linked_ports - ports))
            missing = sorted(map(str, ports - linked_ports))
            raise ArityMismatch(f"ports do not match control arities (unknown: {extra}, unlinked: {missing})")
        names = {x.name for x in self.link if isinstance(x, InnerName)}
        if names != set(self.inner):
            raise MalformedBigraph("the link map must be defined on exactly the inner names")
        for point, target in self.link.items():
            if isinstance(target, Edge) and target.id not in self.edges:
                raise MalformedBigraph(f"{point} is linked to unknown {target}")
            if isinstance(target, OuterName) and target.name not in self.outer:
                raise MalformedBigraph(f"{point} is linked to unknown {target}")
        for p in sorted(ports):
            if p.binding and not isinstance(self.link[p], Edge):
                raise BindingRuleViolation(p)


@dataclass(frozen=True)
class Bigraph:
    """
    A bigraph `dom → cod`.

    Args:
        dom: Inner interface: sites and inner names.
        cod: Outer interface: roots and outer names.
        ctrl: Control of each node.
        edges: Edge identifiers.
        prnt: Parent of each site and node.
        link: Link of each port and inner name.
    """
    dom: Interface
    cod: Interface
    ctrl: Mapping[NodeId, Control] = field(default_factory=dict)
    edges: frozenset[EdgeId] = frozenset()
    prnt: Mapping[Place, Place] = field(default_factory=dict)
    link: Mapping[Point, LinkTarget] = field(default_factory=dict)

    @property
    def nodes(self) -> list[NodeId]:
        return sorted(self.ctrl)

    def place_graph(self) -> PlaceGraph:
        return PlaceGraph(self.dom.width, self.cod.width, self.ctrl, self.prnt)

    def link_graph(self) -> LinkGraph:
        return LinkGraph(tuple(self.dom.names), tuple(self.cod.names), self.ctrl, self.edges, self.link)

    def ports(self) -> list[Port]:
        return [p for v in self.nodes for p in ports_of(v, self.ctrl[v])]

    def __str__(self):
        return f"{self.dom} → {self.cod} ({len(self.ctrl)} nodes, {len(self.edges)} edges)"


def ancestors(g: Bigraph, a: Place) -> Iterator[Place]:
    p = a
    while p.kind != "root":
        p = g.prnt[p]
        yield p


def precedes(g: Bigraph, a: Place, b: Place) -> bool:
    """Whether `b` is a strict ancestor of `a`."""
    if a.kind == "root":
        return False
    return b in ancestors(g, a)


def location(g: Bigraph, point: Point) -> Optional[Place]:
    """Where a point sits: a port at its node, a local inner name at its site, a global inner name nowhere."""
    if isinstance(point, Port):
        return node(point.node)
    i = g.dom.locality(point.name)
    return None if i is None else site(i)


Binder = Union[Port, OuterName]


def binders(g: Bigraph) -> list[tuple[Binder, Place]]:
    """Binding ports located at their node, and local outer names located at their root."""
    out: list[tuple[Binder, Place]] = [(p, node(p.node)) for p in g.ports() if p.binding]
    out.extend((OuterName(y), root(j)) for y, j in g.cod.loc if j is not None)
    return out


def peers(g: Bigraph, binder: Binder) -> list[Point]:
    """The points sharing a link with `binder`."""
    target = binder if isinstance(binder, OuterName) else g.link[binder]
    return sorted((p for p, t in g.link.items() if t == target and p != binder), key=str)


def validate_bigraph(g: Bigraph) -> None:
    """
    Check the place graph (acyclic, nothing inside atomic nodes), the link graph
    (arities, binding ports linked to edges) and the scope rule: every peer of a binder
    located at `w` is located strictly below `w`.
    """
    g.place_graph().validate()
    g.link_graph().validate()
    for binder, at in binders(g):
        for peer in peers(g, binder):
            where = location(g, peer)
            if where is None or not precedes(g, where, at):
                raise ScopeRuleViolation(binder, peer)


def make_bigraph(
        dom: Interface,
        cod: Interface,
        ctrl: Mapping[NodeId, Control],
        edges: Iterable[EdgeId],
        prnt: Mapping[Place, Place],
        link: Mapping[Point, LinkTarget],
) -> Bigraph:
    g = Bigraph(dom, cod, dict(ctrl), frozenset(edges), dict(prnt), dict(link))
    validate_bigraph(g)
    return g


def classify_edges(g: Bigraph) -> tuple[frozenset[EdgeId], dict[EdgeId, Port]]:
    """
    Split the edges into free edges and bound edges, the latter with their binding port.
    """
    bound = {g.link[p].id: p for p in g.ports() if p.binding}
    return frozenset(g.edges - bound.keys()), bound


def identity_bigraph(u: Interface) -> Bigraph:
    return Bigraph(
        u, u,
        prnt={site(i): root(i) for i in range(u.width)},
        link={InnerName(x): OuterName(x) for x in u.names},
    )


def _fresh(ident: str, taken: set[str]) -> str:
    for n in itertools.count(1):
        candidate = f"{ident}'{n}"
        if candidate not in taken:
            return candidate


def compose_bigraphs(g2: Bigraph, g1: Bigraph) -> Bigraph:
    """
    `g2 ∘ g1`: the roots and outer names of `g1` are plugged into the sites and
    inner names of `g2`. Node and edge identifiers of `g2` are renamed only on a clash.
    """
    if g1.cod != g2.dom:
        raise InterfaceMismatch(f"cannot compose: outer face {g1.cod} differs from inner face {g2.dom}")

    taken = set(g1.ctrl)
    rename_node = {}
    for v in g2.nodes:
        rename_node[v] = v if v not in taken else _fresh(v, taken | set(g2.ctrl))
        taken.add(rename_node[v])
    taken = set(g1.edges)
    rename_edge = {}
    for e in sorted(g2.edges):
        rename_edge[e] = e if e not in taken else _fresh(e, taken | set(g2.edges))
        taken.add(rename_edge[e])

    def place2(p: Place) -> Place:
        return node(rename_node[p.key]) if p.kind == "node" else p

    def target2(t: LinkTarget) -> LinkTarget:
        return Edge(rename_edge[t.id]) if isinstance(t, Edge) else t

    ctrl = dict(g1.ctrl)
    ctrl.update({rename_node[v]: k for v, k in g2.ctrl.items()})

    prnt = {}
    for child, parent in g1.prnt.items():
        prnt[child] = place2(g2.prnt[site(parent.key)]) if parent.kind == "root" else parent
    for child, parent in g2.prnt.items():
        if child.kind == "node":
            prnt[place2(child)] = place2(parent)

    link = {}
    for point, target in g1.link.items():
        link[point] = target2(g2.link[InnerName(target.name)]) if isinstance(target, OuterName) else target
    for point, target in g2.link.items():
        if isinstance(point, Port):
            link[Port(rename_node[point.node], point.binding, point.index)] = target2(target)

    edges = frozenset(g1.edges) | {rename_edge[e] for e in g2.edges}
    return Bigraph(g1.dom, g2.cod, ctrl, edges, prnt, link)


def lean_normalize(g: Bigraph) -> Bigraph:
    """Drop idle edges, i.e. edges no point is linked to."""
    used = {t.id for t in g.link.values() if isinstance(t, Edge)}
    return Bigraph(g.dom, g.cod, g.ctrl, frozenset(g.edges & used), g.prnt, g.link)


def to_digraph(g: Bigraph) -> nx.DiGraph:
    """
    The bigraph as a labelled digraph. Sites, roots and names carry unique labels,
    so isomorphisms only permute nodes and edges.
    """
    d = nx.DiGraph()
    for i in range(g.dom.width):
        d.add_node(site(i), label=f"site:{i}")
    for j in range(g.cod.width):
        d.add_node(root(j), label=f"root:{j}")
    for v, k in g.ctrl.items():
        d.add_node(node(v), label=f"ctrl:{k.name}")
    for p in g.ports():
        d.add_node(p, label=f"{'bind' if p.binding else 'free'}:{p.index}")
        d.add_edge(node(p.node), p, label="port")
    for x in g.dom.names:
        d.add_node(InnerName(x), label=f"inner:{x}")
    for y in g.cod.names:
        d.add_node(OuterName(y), label=f"outer:{y}")
    for e in g.edges:
        d.add_node(Edge(e), label="edge")
    for child, parent in g.prnt.items():
        d.add_edge(child, parent, label="prnt")
    for point, target in g.link.items():
        d.add_edge(point, target, label="link")
    return d


def eq_bigraphs(g1: Bigraph, g2: Bigraph) -> bool:
    """Whether `g1` and `g2` are equal up to idle edges and a renaming of nodes and edges."""
    if g1.dom != g2.dom or g1.cod != g2.cod:
        return False
    return isomorphic(to_digraph(lean_normalize(g1)), to_digraph(lean_normalize(g2)))
