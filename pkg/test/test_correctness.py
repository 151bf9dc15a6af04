import random

import pytest

import bignet
from bignet import correctness, net
from bignet.formula import I, Lolli, T, Tensor
from bignet.net import cell_cod, cell_dom, cod, dom
from bignet.util import SizeLimit
from generators import NET_INTERFACES, all_nets, random_net

# (t -o t) -> (t -o t) wired back onto itself on both sides
twisted = net.make_net(Lolli(T, T), Lolli(T, T), [], [(dom("R"), dom("L")), (cod("L"), cod("R"))])


def unit_net(target):
    """`t ⊗ t → I ⊸ (t ⊗ t)` with the unit wired to `target`."""
    tt = Tensor(T, T)
    return net.make_net(tt, Lolli(I, tt), [], [
        (dom("L"), cod("RL")),
        (dom("R"), cod("RR")),
        (cod("L"), target),
    ])


def test_identity_is_correct():
    for a in [T, Lolli(T, T), Tensor(T, Lolli(I, T))]:
        n = net.identity_net(a)
        assert correctness.is_correct_fast(n)
        assert correctness.is_correct_oracle(n)


def test_twisted_is_incorrect():
    assert not correctness.is_correct_fast(twisted)
    assert not correctness.is_correct_oracle(twisted)
    reports = list(correctness.switching_reports(twisted))
    assert len(reports) == 4
    assert not any(r.acyclic for r in reports)


def test_unit_wires():
    assert correctness.is_correct_fast(unit_net(cod("RL")))
    assert correctness.is_correct_fast(unit_net(cod("RR")))
    assert correctness.is_correct_oracle(unit_net(cod("RR")))


def test_fixtures_are_correct(send_get_net, scope_violation_net):
    assert correctness.is_correct_fast(send_get_net)
    assert correctness.is_correct_fast(scope_violation_net)
    assert correctness.is_correct_oracle(scope_violation_net)


def test_unit_into_own_cell_is_incorrect(send_get_net):
    n = send_get_net
    wires = (n.wires - {(cell_cod(4), cod("RR"))}) | {(cell_cod(4), cell_dom(4))}
    assert not correctness.is_correct_fast(net.make_net(n.dom, n.cod, n.cells, wires))


def test_switching_cap(send_get_net, monkeypatch):
    monkeypatch.setitem(bignet.settings, "switching_cap", 1000)
    with pytest.raises(SizeLimit):
        correctness.is_correct_oracle(send_get_net)


def test_rewiring():
    assert correctness.rewiring_equivalent(unit_net(cod("RL")), unit_net(cod("RR")))
    assert not correctness.rewiring_equivalent(unit_net(cod("RL")), twisted)


def test_rewiring_cap(monkeypatch):
    monkeypatch.setitem(bignet.settings, "rewiring_state_cap", 0)
    with pytest.raises(SizeLimit):
        correctness.rewiring_equivalent(unit_net(cod("RL")), unit_net(cod("RR")))


def _agree(n):
    reports = list(correctness.switching_reports(n))
    for r in reports:
        assert r.vertices == r.edges + 1
        assert r.connected == r.acyclic
    assert correctness.is_correct_fast(n) == all(r.connected and r.acyclic for r in reports)


@pytest.mark.parametrize("dom_, cod_", NET_INTERFACES)
def test_fast_agrees_with_oracle_on_every_small_net(dom_, cod_):
    count = 0
    for n in all_nets(dom_, cod_, max_cells=3):
        _agree(n)
        count += 1
    assert count > 0


def test_fast_agrees_with_oracle_on_random_nets():
    rng = random.Random(7)
    verdicts = set()
    for _ in range(1000):
        n = random_net(rng)
        _agree(n)
        verdicts.add(correctness.is_correct_fast(n))
    assert verdicts == {True, False}


def test_switching_cycle_survives_extra_wires():
    assert correctness.has_switching_cycle(twisted)
    assert not correctness.has_switching_cycle(unit_net(cod("RR")))
