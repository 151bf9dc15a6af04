from pathlib import Path

import pytest
from click.testing import CliRunner

import bignet
import bignet.cli
from bignet import fileformats, net
from bignet.formula import I, Lolli, T, Tensor
from bignet.net import cod, dom

misc: Path = Path(__file__).parent.parent / "misc"
send_get = str(misc / "send-get.json")
send_get_net = str(misc / "send-get.net.json")
scope_violation = str(misc / "scope-violation.net.json")


@pytest.fixture(scope="module")
def bignet_cli():
    runner = CliRunner(env={"BIGNET_SIGNATURE": str(misc / "pi.bsig")})

    def run(command, *args, expect=0, **kwargs):
        kwargs.setdefault("catch_exceptions", False)
        result = runner.invoke(bignet.cli.main, command, *args, **kwargs)
        if result.exit_code != expect:
            raise RuntimeError(f"exit code {result.exit_code}: {result.output}")
        return result

    with runner.isolated_filesystem():
        yield run


@pytest.fixture
def caps(monkeypatch):
    # commands write their caps into the global settings
    for key in ("switching_cap", "rewiring_state_cap"):
        monkeypatch.setitem(bignet.settings, key, bignet.settings[key])


def write_net(path, n):
    Path(path).write_text(fileformats.serialize_net(n))


def test_version(bignet_cli):
    assert bignet.__version__ in bignet_cli(["--version"]).output


def test_check_net(bignet_cli, caps):
    assert "correct" in bignet_cli(["check-net", send_get_net]).output
    bignet_cli(["check-net", "--oracle", scope_violation])
    write_net("twisted.json", net.make_net(
        Lolli(T, T), Lolli(T, T), [], [(dom("R"), dom("L")), (cod("L"), cod("R"))]))
    assert "not correct" in bignet_cli(["check-net", "twisted.json"], expect=1).output


def test_check_net_errors(bignet_cli, caps):
    Path("broken.json").write_text("{")
    bignet_cli(["check-net", "broken.json"], expect=2)
    Path("bad-wiring.json").write_text('{"dom": "t", "cod": "t", "cells": [], "wires": []}')
    assert "SortBijectionViolation" in bignet_cli(["check-net", "bad-wiring.json"], expect=1).output
    result = bignet_cli(["check-net", "--oracle", "--switching-cap", "10", send_get_net], expect=1)
    assert "SizeLimit" in result.output


def test_switchings(bignet_cli, caps):
    assert bignet_cli(["switchings", send_get_net]).output.strip() == "65536"
    table = bignet_cli(["switchings", "--enumerate", scope_violation]).output
    assert "LLL" in table and "RRR" in table
    limited = bignet_cli(["switchings", "--enumerate", "--rows", "2", scope_violation]).output
    assert "only first 2 rows shown" in limited


def test_missing_signature(bignet_cli):
    bignet_cli(["check-net", send_get_net], expect=2, env={"BIGNET_SIGNATURE": None})
    Path("bad.bsig").write_text("control nu free=0 binding=0\n")
    bignet_cli(["check-net", "--sig", "bad.bsig", send_get_net], expect=2)


def test_translate_and_extract(bignet_cli, caps):
    bignet_cli(["translate", send_get, "-o", "translated.json"])
    bignet_cli(["check-net", "translated.json"])
    assert bignet_cli(["eq-nets", "translated.json", send_get_net]).output.strip() == "equal (canonical)"
    bignet_cli(["extract", "translated.json", "-o", "extracted.json"])
    assert "x0_0" in Path("extracted.json").read_text()
    bignet_cli(["check-bigraph", "extracted.json"])
    assert "ScopeViolation" in bignet_cli(["extract", scope_violation], expect=1).output


def test_eq_nets_crosscheck(bignet_cli, caps):
    tt = Tensor(T, T)
    for name, target in [("left.json", cod("RL")), ("right.json", cod("RR"))]:
        write_net(name, net.make_net(tt, Lolli(I, tt), [], [
            (dom("L"), cod("RL")), (dom("R"), cod("RR")), (cod("L"), target)]))
    output = bignet_cli(["eq-nets", "-v", "left.json", "right.json"]).output
    assert "rewiring search: equal" in output
    assert "equal (canonical)" in output
    assert "different" in bignet_cli(["eq-nets", "left.json", send_get_net], expect=1).output


def test_bigraphs(bignet_cli, closer):
    Path("closer.json").write_text(fileformats.serialize_bigraph(closer))
    bignet_cli(["check-bigraph", send_get])
    bignet_cli(["compose-bigraphs", "closer.json", send_get, "-o", "composed.json"])
    assert "g'1" in Path("composed.json").read_text()
    assert "equal" in bignet_cli(["eq-bigraphs", send_get, send_get]).output
    bignet_cli(["eq-bigraphs", send_get, "composed.json"], expect=1)
    assert "InterfaceMismatch" in bignet_cli(["compose-bigraphs", send_get, send_get], expect=1).output


def test_compose_nets(bignet_cli, theory):
    write_net("id.json", net.identity_net(fileformats.parse_net_file(send_get_net, theory).cod))
    bignet_cli(["compose-nets", "id.json", send_get_net, "-o", "composed.net.json"])
    assert Path("composed.net.json").read_text() == Path(send_get_net).read_text()
    bignet_cli(["compose-nets", send_get_net, send_get_net], expect=1)


def test_dot(bignet_cli):
    assert bignet_cli(["dot", send_get]).output.startswith("digraph bigraph {")
    assert bignet_cli(["dot", send_get_net]).output.startswith("digraph net {")
    assert bignet_cli(["dot", "--kind", "net", send_get_net]).output.startswith("digraph net {")