"""
Translation of bigraphs into nets, and extraction of bigraphs back from nets.

An interface with `n` sites becomes `v^g ⊸ ⊗_i (v^n_i ⊸ t)`, one `v` per name
(`g` global names, `n_i` names at site `i`, each group in name order) and one `t` per site.
A bigraph becomes a normal net with one logical cell per node and one `nu` cell per free edge:
the parent map turns into `t` links, the link map into `v` links.
"""
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

from bignet import bigraph as bg
from bignet.bigraph import Bigraph, Edge, InnerName, Interface, OuterName, Place, Port
from bignet.correctness import is_correct_fast
from bignet.formula import I, Formula, LeafPath, Lolli, T, Tensor, V, factor_path, print_formula, tensor_of, v_power
from bignet.net import PortRef, cell_cod, cell_dom, cod, dom
from bignet.normal import MalformedNormalNet, NormalNet, expand, validate_normal
from bignet.theory import STRUCTURAL_OPERATIONS, NU, OpKind, control_operation
from bignet.util import BignetError


class NotClosed(BignetError):
    pass


class CorrectnessViolation(BignetError):
    pass


class NotInImage(BignetError):
    pass


class ScopeViolation(BignetError):
    """The bigraph read off a net breaks the scope rule."""

    def __init__(self, cause: bg.ScopeRuleViolation):
        super().__init__(str(cause))
        self.binder = cause.binder
        self.peer = cause.peer


CLOSED_DOM = Lolli(I, I)
CLOSED_COD = Lolli(I, Lolli(I, T))


def t_obj(u: Interface) -> Formula:
    """The formula of an interface."""
    groups = [Lolli(v_power(len(u.local_names(i))), T) for i in range(u.width)]
    return Lolli(v_power(len(u.global_names())), tensor_of(groups))


def _group_path(u: Interface, i: int) -> LeafPath:
    return "R" + factor_path(i, u.width)


def name_path(u: Interface, x: bg.Name) -> LeafPath:
    """Path of the `v` leaf of name `x` in :func:`t_obj`."""
    i = u.locality(x)
    if i is None:
        group = u.global_names()
        return "L" + factor_path(group.index(x), len(group))
    group = u.local_names(i)
    return _group_path(u, i) + "L" + factor_path(group.index(x), len(group))


def place_path(u: Interface, i: int) -> LeafPath:
    """Path of the `t` leaf of site or root `i` in :func:`t_obj`."""
    return _group_path(u, i) + "R"


def _power(f: Formula) -> int:
    """`n` if `f` is `v^n`, otherwise raise :class:`NotInImage`."""
    if f == I:
        return 0
    n = 0
    while isinstance(f, Tensor) and f.left == V:
        n += 1
        f = f.right
    if f != V:
        raise NotInImage(f"{print_formula(f)} is not a tensor power of v")
    return n + 1


def interface_of(f: Formula, names: Optional[Sequence[bg.Name]] = None) -> Interface:
    """
    Recover an interface whose formula is `f`.

    Args:
        f: A formula.
        names: Names for the `v` leaves, global ones first and then site by site,
            each group in increasing order. Generated if omitted.

    Raises:
        NotInImage: `f` is not the formula of any interface.
    """
    if not isinstance(f, Lolli):
        raise NotInImage(f"{print_formula(f)} is not of the form v^n ⊸ ...")
    n_global = _power(f.left)
    counts = []
    rest = f.right
    if rest != I:
        while isinstance(rest, Tensor):
            counts.append(_site_group(rest.left))
            rest = rest.right
        counts.append(_site_group(rest))

    if names is None:
        groups = [_generated("y", n_global)] + [_generated(f"x{i}_", n) for i, n in enumerate(counts)]
    else:
        names = list(names)
        if len(names) != n_global + sum(counts):
            raise BignetError(f"expected {n_global + sum(counts)} names, got {len(names)}")
        groups, at = [], 0
        for n in [n_global] + counts:
            groups.append(names[at:at + n])
            at += n
        for group in groups:
            if group != sorted(group):
                raise BignetError(f"names {group} are not in increasing order")
    loc = {x: None for x in groups[0]}
    for i, group in enumerate(groups[1:]):
        loc.update({x: i for x in group})
    return bg.interface(len(counts), loc)


def _site_group(f: Formula) -> int:
    if not isinstance(f, Lolli) or f.right != T:
        raise NotInImage(f"{print_formula(f)} is not of the form v^n ⊸ t")
    return _power(f.left)


def _generated(prefix: str, n: int) -> list[str]:
    width = len(str(max(n - 1, 0)))
    return [f"{prefix}{k:0{width}d}" for k in range(n)]


# Ports of a logical cell, relative to the cell's domain (v^B ⊸ x) ⊗ v^F.

def binding_path(j: int, binding: int) -> LeafPath:
    return "LL" + factor_path(j, binding)


def free_path(j: int, free: int) -> LeafPath:
    return "R" + factor_path(j, free)


CONTENT_PATH = "LR"


def t_mor(g: Bigraph) -> NormalNet:
    """
    The normal net of a bigraph: a logical cell per node (sorted by node id), then a `nu`
    cell per free edge (sorted by edge id). Idle edges are discarded first.
    """
    g = bg.lean_normalize(g)
    bg.validate_bigraph(g)
    nodes = g.nodes
    free, bound = bg.classify_edges(g)
    free = sorted(free)
    cell_of = {v: i for i, v in enumerate(nodes)}
    nu_of = {e: len(nodes) + j for j, e in enumerate(free)}
    cells = [control_operation(g.ctrl[v]) for v in nodes] + [STRUCTURAL_OPERATIONS[NU]] * len(free)

    def parent(p: Place) -> PortRef:
        if p.kind == "root":
            return cod(place_path(g.cod, p.key))
        return cell_dom(cell_of[p.key], CONTENT_PATH)

    t_link = [(dom(place_path(g.dom, i)), parent(g.prnt[bg.site(i)])) for i in range(g.dom.width)]
    t_link += [(cell_cod(cell_of[v]), parent(g.prnt[bg.node(v)])) for v in nodes]

    def producer(target: bg.LinkTarget) -> PortRef:
        if isinstance(target, OuterName):
            return cod(name_path(g.cod, target.name))
        if target.id in bound:
            p = bound[target.id]
            return cell_dom(cell_of[p.node], binding_path(p.index, g.ctrl[p.node].binding))
        return cell_cod(nu_of[target.id])

    v_link = []
    for point, target in g.link.items():
        if isinstance(point, InnerName):
            consumer = dom(name_path(g.dom, point.name))
        elif point.binding:
            continue
        else:
            consumer = cell_dom(cell_of[point.node], free_path(point.index, g.ctrl[point.node].free))
        v_link.append((consumer, producer(target)))

    return NormalNet(t_obj(g.dom), t_obj(g.cod), tuple(cells), tuple(sorted(t_link)), tuple(sorted(v_link)))


@dataclass(frozen=True)
class PortCorrespondence:
    """
    What each port of a normal net stands for in a bigraph: a site, node or root
    for `t` ports; an inner name, free port, edge or outer name for `v` ports.
    """
    meaning: dict[PortRef, Union[Place, bg.Point, bg.LinkTarget]]

    def __getitem__(self, ref: PortRef):
        try:
            return self.meaning[ref]
        except KeyError:
            raise NotInImage(f"port {ref} has no counterpart in a bigraph")


def port_correspondence(m: NormalNet, inner: Interface, outer: Interface) -> PortCorrespondence:
    meaning = {}
    for x in inner.names:
        meaning[dom(name_path(inner, x))] = InnerName(x)
    for i in range(inner.width):
        meaning[dom(place_path(inner, i))] = bg.site(i)
    for y in outer.names:
        meaning[cod(name_path(outer, y))] = OuterName(y)
    for j in range(outer.width):
        meaning[cod(place_path(outer, j))] = bg.root(j)
    for i, c in enumerate(m.cells):
        if c.kind is OpKind.Nu:
            meaning[cell_cod(i)] = Edge(f"e{i}")
            continue
        k = c.control
        v = f"n{i}"
        for j in range(k.binding):
            meaning[cell_dom(i, binding_path(j, k.binding))] = Edge(f"b{i}.{j}")
        for j in range(k.free):
            meaning[cell_dom(i, free_path(j, k.free))] = Port(v, False, j)
        meaning[cell_dom(i, CONTENT_PATH)] = bg.node(v)
        meaning[cell_cod(i)] = bg.node(v)
    return PortCorrespondence(meaning)


def _extract(m: NormalNet, inner: Interface, outer: Interface) -> Bigraph:
    validate_normal(m)
    try:
        correct = is_correct_fast(expand(m))
    except MalformedNormalNet:
        correct = False
    if not correct:
        raise CorrectnessViolation("the net is not correct")
    ports = port_correspondence(m, inner, outer)
    ctrl, edges, link = {}, set(), {}
    for i, c in enumerate(m.cells):
        if c.kind is OpKind.Nu:
            edges.add(f"e{i}")
            continue
        ctrl[f"n{i}"] = c.control
        for j in range(c.control.binding):
            edges.add(f"b{i}.{j}")
            link[Port(f"n{i}", True, j)] = Edge(f"b{i}.{j}")
    prnt = {ports[s]: ports[t] for s, t in m.t_link}
    for consumer, producer in m.v_link:
        link[ports[consumer]] = ports[producer]
    return Bigraph(inner, outer, ctrl, frozenset(edges), prnt, link)


def from_closed_net(m: NormalNet) -> Bigraph:
    """
    The bigraph `(0, ∅) → (1, ∅)` of a correct net `I ⊸ I → I ⊸ (I ⊸ t)`:
    nodes are the logical cells, edges the binding ports and the `nu` cells.
    """
    if m.dom != CLOSED_DOM or m.cod != CLOSED_COD:
        raise NotClosed(
            f"expected {print_formula(CLOSED_DOM)} → {print_formula(CLOSED_COD)}, "
            f"got {print_formula(m.dom)} → {print_formula(m.cod)}")
    g = _extract(m, bg.interface(0), bg.interface(1))
    bg.validate_bigraph(g)
    return g


def try_extract(
        m: NormalNet,
        inner: Optional[Interface] = None,
        outer: Optional[Interface] = None,
) -> Bigraph:
    """
    Read a bigraph off a net between interface formulas.

    Args:
        m: A correct normal net.
        inner: Inner interface; recovered from `m.dom` with generated names if omitted.
        outer: Outer interface; recovered from `m.cod` with generated names if omitted.

    Raises:
        NotInImage: The domain or codomain is not an interface formula.
        ScopeViolation: The net is correct, but the bigraph it describes breaks the scope rule.
    """
    inner = inner or interface_of(m.dom)
    outer = outer or interface_of(m.cod)
    if t_obj(inner) != m.dom or t_obj(outer) != m.cod:
        raise NotInImage("the given interfaces do not translate to the net's domain and codomain")
    g = _extract(m, inner, outer)
    try:
        bg.validate_bigraph(g)
    except bg.ScopeRuleViolation as e:
        raise ScopeViolation(e)
    return g
