import random
from collections import defaultdict

import networkx as nx
import pytest

from bignet import bigraph as bg
from bignet import net, normal, translate
from bignet.bigraph import Edge, InnerName, OuterName
from bignet.correctness import is_correct_fast
from bignet.formula import I, Lolli, T, Tensor, V
from bignet.net import cell_cod, cell_dom, cod, dom
from bignet.normal import NormalNet
from bignet.theory import control_operation
from bignet.util import BignetError

from generators import SIGNATURE, SMALL, random_bigraph, random_closed_net, small_bigraphs


def test_t_obj():
    assert translate.t_obj(bg.interface(0)) == translate.CLOSED_DOM
    assert translate.t_obj(bg.interface(1)) == translate.CLOSED_COD
    assert translate.t_obj(bg.interface(1, {"y": None, "x": 0})) == Lolli(V, Lolli(V, T))
    assert translate.t_obj(bg.interface(2, {"x": 1})) == Lolli(I, Tensor(Lolli(I, T), Lolli(V, T)))


def test_interface_of():
    u = bg.interface(2, {"y": None, "b": 1, "a": 1})
    assert translate.interface_of(translate.t_obj(u), ["y", "a", "b"]) == u
    generated = translate.interface_of(Lolli(Tensor(V, V), Lolli(V, T)))
    assert generated == bg.interface(1, {"y0": None, "y1": None, "x0_0": 0})
    with pytest.raises(translate.NotInImage):
        translate.interface_of(T)
    with pytest.raises(translate.NotInImage):
        translate.interface_of(Lolli(V, T))
    with pytest.raises(BignetError):
        translate.interface_of(translate.t_obj(u), ["y"])
    with pytest.raises(BignetError):
        translate.interface_of(translate.t_obj(u), ["y", "b", "a"])


def test_paths(send_get):
    g = send_get
    assert translate.name_path(g.dom, "z") == "RLL"
    assert translate.place_path(g.dom, 2) == "RRRR"
    assert translate.name_path(g.cod, "t") == "LL"
    assert translate.name_path(g.cod, "y") == "LR"
    assert translate.place_path(g.cod, 0) == "RR"


def test_t_mor_matches_drawn_net(send_get, send_get_net, theory):
    m = translate.t_mor(send_get)
    assert m == normal.normalize(send_get_net, theory)
    n = normal.expand(m)
    assert is_correct_fast(n)
    assert normal.eq_nets(n, send_get_net, theory)


def test_port_correspondence(send_get):
    g = send_get
    m = translate.t_mor(g)
    ports = translate.port_correspondence(m, g.dom, g.cod)
    assert ports[dom("RLL")] == InnerName("z")
    assert ports[dom("RRLR")] == bg.site(1)
    assert ports[cell_dom(0, "LL")] == Edge("b0.0")
    assert ports[cell_cod(1)] == bg.node("n1")
    assert ports[cell_cod(2)] == Edge("e2")
    assert ports[cod("LR")] == OuterName("y")
    with pytest.raises(translate.NotInImage):
        ports[cell_dom(7)]


def test_round_trip(send_get):
    g = send_get
    back = translate.try_extract(translate.t_mor(g), g.dom, g.cod)
    assert bg.eq_bigraphs(back, g)
    assert back.nodes == ["n0", "n1"]


def test_extract_generates_names(send_get):
    back = translate.try_extract(translate.t_mor(send_get))
    assert back.dom == bg.interface(3, {"x0_0": 0})
    assert back.cod == bg.interface(1, {"y0": None, "y1": None})


def test_extract_interface_mismatch(send_get):
    with pytest.raises(translate.NotInImage):
        translate.try_extract(translate.t_mor(send_get), bg.interface(1), send_get.cod)


def test_closed_round_trip():
    for g in small_bigraphs(max_nodes=3):
        m = translate.t_mor(g)
        assert len(m.cells) == len(g.ctrl) + len(bg.classify_edges(bg.lean_normalize(g))[0])
        assert bg.eq_bigraphs(translate.from_closed_net(m), g)


def test_not_closed(send_get):
    with pytest.raises(translate.NotClosed):
        translate.from_closed_net(translate.t_mor(send_get))


@pytest.mark.parametrize("seed", range(12))
def test_random_round_trip(seed):
    rng = random.Random(seed)
    inner = bg.interface(2, {"u": None, "z": 0})
    outer = bg.interface(2, {"y": None, "w": 1})
    g = random_bigraph(rng, inner, outer, nodes=4, edges=2, signature=SIGNATURE)
    m = translate.t_mor(g)
    assert is_correct_fast(normal.expand(m))
    assert bg.eq_bigraphs(translate.try_extract(m, inner, outer), g)


def _partition(items, digraph, equal) -> set[frozenset[int]]:
    """Classes of `equal`, comparing only items whose digraphs share a hash."""
    buckets = defaultdict(list)
    for i, x in enumerate(items):
        buckets[nx.weisfeiler_lehman_graph_hash(digraph(x), node_attr="label", edge_attr="label")].append(i)
    classes = set()
    for bucket in buckets.values():
        reps: list[list[int]] = []
        for i in bucket:
            for cls in reps:
                if equal(items[cls[0]], items[i]):
                    cls.append(i)
                    break
            else:
                reps.append([i])
        classes.update(frozenset(cls) for cls in reps)
    return classes


def test_equality_is_preserved_and_reflected():
    graphs = list(small_bigraphs(max_nodes=3))
    normals = [translate.t_mor(g) for g in graphs]
    by_bigraph = _partition(graphs, lambda g: bg.to_digraph(bg.lean_normalize(g)), bg.eq_bigraphs)
    by_net = _partition(normals, normal.normal_digraph, normal.eq_normal)
    assert len(by_bigraph) < len(graphs)
    assert by_bigraph == by_net



def test_composition_is_preserved(send_get, closer):
    composed = net.compose_nets(normal.expand(translate.t_mor(closer)), normal.expand(translate.t_mor(send_get)))
    expected = translate.t_mor(bg.compose_bigraphs(closer, send_get))
    assert normal.eq_normal(normal.normalize(composed), expected)


def test_scope_violation(scope_violation_net):
    m = normal.normalize(scope_violation_net)
    with pytest.raises(translate.ScopeViolation) as e:
        translate.try_extract(m)
    assert e.value.binder == OuterName("x0_0")
    assert e.value.peer == InnerName("y0")


def test_correctness_violation(theory):
    # a node placed inside itself
    m = NormalNet(
        translate.CLOSED_DOM, translate.CLOSED_COD, (theory["get"],),
        ((cell_cod(0), cell_dom(0, "LR")),),
        ((cell_dom(0, "R"), cell_dom(0, "LL")),),
    )
    with pytest.raises(translate.CorrectnessViolation):
        translate.from_closed_net(m)


def test_nested_atoms_below_a_self_parented_node():
    k, a = control_operation(SMALL["k"]), control_operation(SMALL["a"])
    m = NormalNet(
        translate.CLOSED_DOM, translate.CLOSED_COD, (k, a, a, a, a),
        tuple((cell_cod(i), cell_dom(0, "LR")) for i in range(5)),
        tuple((cell_dom(i, "R"), cell_dom(0, "LL")) for i in range(5)),
    )
    with pytest.raises(translate.CorrectnessViolation):
        translate.from_closed_net(m)


@pytest.mark.parametrize("seed", range(200))
def test_correct_closed_nets_come_from_bigraphs(seed):
    m = random_closed_net(random.Random(seed))
    g = translate.from_closed_net(m)
    assert normal.eq_normal(translate.t_mor(g), m)


@pytest.mark.parametrize("u", [
    bg.interface(0),
    bg.interface(1),
    bg.interface(1, {"y": None, "x": 0}),
    bg.interface(2, {"x": 1, "z": None}),
    bg.interface(3, {"a": 0, "b": 0, "c": 2}),
])
def test_identity_translates_to_identity(u):
    expected = normal.normalize(net.identity_net(translate.t_obj(u)))
    assert normal.eq_normal(translate.t_mor(bg.identity_bigraph(u)), expected)


INNER = bg.interface(1, {"u": None, "z": 0})
MIDDLE = bg.interface(2, {"y": None, "w": 1})
OUTER = bg.interface(1, {"x": None})


def _net(g):
    return normal.expand(translate.t_mor(g))


@pytest.mark.parametrize("seed", range(200))
def test_composition_is_preserved_on_random_pairs(seed):
    rng = random.Random(seed)
    g1 = random_bigraph(rng, INNER, MIDDLE, nodes=rng.randint(0, 3), edges=1)
    g2 = random_bigraph(rng, MIDDLE, OUTER, nodes=rng.randint(0, 3), edges=1)
    composed = net.compose_nets(_net(g2), _net(g1))
    assert is_correct_fast(composed)
    expected = translate.t_mor(bg.compose_bigraphs(g2, g1))
    assert normal.eq_normal(normal.normalize(composed), expected)


@pytest.mark.parametrize("seed", range(60))
def test_category_laws_on_random_triples(seed):
    rng = random.Random(seed)
    f1 = _net(random_bigraph(rng, INNER, MIDDLE, nodes=rng.randint(0, 2), edges=1))
    f2 = _net(random_bigraph(rng, MIDDLE, MIDDLE, nodes=rng.randint(0, 2), edges=1))
    f3 = _net(random_bigraph(rng, MIDDLE, OUTER, nodes=rng.randint(0, 2), edges=1))
    left = net.compose_nets(f3, net.compose_nets(f2, f1))
    right = net.compose_nets(net.compose_nets(f3, f2), f1)
    assert is_correct_fast(left) and is_correct_fast(right)
    assert normal.eq_nets(left, right)
    for f in (f1, f2, f3):
        assert normal.eq_nets(net.compose_nets(f, net.identity_net(f.dom)), f)
        assert normal.eq_nets(net.compose_nets(net.identity_net(f.cod), f), f)
    assert is_correct_fast(net.tensor_nets(f1, f3))
    assert is_correct_fast(net.tensor_nets(left, f2))
