import pytest

from bignet.formula import I, Lolli, T, Tensor, V
from bignet.theory import (NU, PAR, BigSignature, Control, DuplicateControl, OpKind, ReservedControlName,
                           control_operation, derive_theory, make_signature)
from bignet.util import BignetError

send = Control("send", binding=0, free=2)
get = Control("get", binding=1, free=1)


def test_control_operation():
    assert control_operation(get).dom == Tensor(Lolli(V, T), V)
    assert control_operation(get).cod == T
    assert control_operation(send).dom == Tensor(Lolli(I, T), Tensor(V, V))
    atom = control_operation(Control("a", binding=0, free=0, atomic=True))
    assert atom.dom == Tensor(Lolli(I, I), I)
    assert atom.kind is OpKind.Logical
    assert not atom.structural


def test_signature_lookup():
    s = make_signature([send, get])
    assert "get" in s
    assert "nope" not in s
    assert s["get"] is get
    assert len(s) == 2
    with pytest.raises(KeyError):
        s["nope"]


def test_signature_errors():
    with pytest.raises(DuplicateControl):
        make_signature([send, send])
    with pytest.raises(ReservedControlName):
        make_signature([Control(NU, 0, 0)])
    with pytest.raises(BignetError):
        Control("bad", binding=-1, free=0)
    with pytest.raises(BignetError):
        Control("", binding=0, free=0)


def test_derive_theory():
    theory = derive_theory(make_signature([send, get]))
    assert set(theory.operations) == {"|", "0", "nu", "c", "w", "send", "get"}
    assert theory[PAR].dom == Tensor(T, T)
    assert theory[NU].cod == V
    assert theory["get"].control is get
    assert len(theory.equations) == 3
    assert derive_theory(BigSignature()).signature[0].structural
