from pathlib import Path

import pytest

from bignet import bigraph as bg
from bignet import fileformats
from bignet.theory import derive_theory

misc: Path = Path(__file__).parent.parent / "misc"


@pytest.fixture(scope="session")
def signature():
    return fileformats.parse_signature_file(misc / "pi.bsig")


@pytest.fixture(scope="session")
def theory(signature):
    return derive_theory(signature)


@pytest.fixture(scope="session")
def send_get(signature):
    """The bigraph `get` and `send` sharing a free edge, with `get` binding `z`."""
    return fileformats.parse_bigraph_file(misc / "send-get.json", signature)


@pytest.fixture(scope="session")
def send_get_net(theory):
    """A hand-drawn net for :func:`send_get`, with structural cells in place."""
    return fileformats.parse_net_file(misc / "send-get.net.json", theory)


@pytest.fixture(scope="session")
def scope_violation_net(theory):
    """A correct net that would link a global inner name to a local outer name."""
    return fileformats.parse_net_file(misc / "scope-violation.net.json", theory)


@pytest.fixture(scope="session")
def closer(signature):
    """`(1, {t, y}) → (1, {y})`: a `get` node, named like the one in `send_get`, closing `t` with a fresh edge."""
    return bg.make_bigraph(
        bg.interface(1, {"t": None, "y": None}),
        bg.interface(1, {"y": None}),
        {"g": signature["get"]},
        {"e", "gb"},
        {bg.site(0): bg.node("g"), bg.node("g"): bg.root(0)},
        {
            bg.InnerName("t"): bg.Edge("e"),
            bg.InnerName("y"): bg.OuterName("y"),
            bg.Port("g", True, 0): bg.Edge("gb"),
            bg.Port("g", False, 0): bg.Edge("e"),
        },
    )
