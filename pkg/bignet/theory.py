"""
Bigraphical signatures and the symmetric monoidal theory derived from them.
"""
import enum
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Optional

from bignet.formula import I, Formula, Lolli, T, Tensor, V, v_power
from bignet.util import BignetError

PAR = "|"
ZERO = "0"
NU = "nu"
CONTRACT = "c"
WEAKEN = "w"
STRUCTURAL = (PAR, ZERO, NU, CONTRACT, WEAKEN)

EQUATIONS = ("t-monoid", "v-comonoid", "nu-w-annihilation")
"""
Names of the fixed equation schemas of the theory: `(t, |, 0)` is a commutative monoid,
`(v, c, w)` a cocommutative comonoid, and `nu ; w = id_I`.
They are decided by :func:`bignet.normal.normalize`, not stored as net pairs.
"""


class DuplicateControl(BignetError):
    def __init__(self, name: str):
        super().__init__(f"Control {name!r} is declared twice.")
        self.name = name


class ReservedControlName(BignetError):
    def __init__(self, name: str):
        super().__init__(f"Control name {name!r} is reserved for a structural operation.")
        self.name = name


@dataclass(frozen=True)
class Control:
    name: str
    binding: int
    free: int
    atomic: bool = False

    def __post_init__(self):
        if not self.name:
            raise BignetError("Control names must not be empty.")
        if self.binding < 0 or self.free < 0:
            raise BignetError(f"Control {self.name!r} has a negative arity.")


@dataclass(frozen=True)
class BigSignature:
    controls: tuple[Control, ...] = ()

    def __getitem__(self, name: str) -> Control:
        for k in self.controls:
            if k.name == name:
                return k
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(k.name == name for k in self.controls)

    def __iter__(self):
        return iter(self.controls)

    def __len__(self):
        return len(self.controls)


def validate_signature(s: BigSignature) -> None:
    """
    Raise if two controls share a name or a control shadows a structural operation.
    """
    seen = set()
    for k in s.controls:
        if k.name in seen:
            raise DuplicateControl(k.name)
        if k.name in STRUCTURAL:
            raise ReservedControlName(k.name)
        seen.add(k.name)


def make_signature(controls: Iterable[Control]) -> BigSignature:
    s = BigSignature(tuple(controls))
    validate_signature(s)
    return s


class OpKind(enum.Enum):
    Par = "par"
    Zero = "zero"
    Nu = "nu"
    Contract = "contract"
    Weaken = "weaken"
    Logical = "logical"


@dataclass(frozen=True)
class SmcOperation:
    name: str
    dom: Formula
    cod: Formula
    kind: OpKind
    control: Optional[Control] = field(default=None, compare=False)

    @property
    def structural(self) -> bool:
        return self.kind is not OpKind.Logical


STRUCTURAL_OPERATIONS = {
    PAR: SmcOperation(PAR, Tensor(T, T), T, OpKind.Par),
    ZERO: SmcOperation(ZERO, I, T, OpKind.Zero),
    NU: SmcOperation(NU, I, V, OpKind.Nu),
    CONTRACT: SmcOperation(CONTRACT, V, Tensor(V, V), OpKind.Contract),
    WEAKEN: SmcOperation(WEAKEN, V, I, OpKind.Weaken),
}


def control_operation(k: Control) -> SmcOperation:
    """
    The logical operation of a control:
    `(v^B ⊸ x) ⊗ v^F → t`, where `x` is `I` for atomic controls and `t` otherwise.

    Args:
        k: The control.
    """
    x = I if k.atomic else T
    dom = Tensor(Lolli(v_power(k.binding), x), v_power(k.free))
    return SmcOperation(k.name, dom, T, OpKind.Logical, k)


@dataclass(frozen=True)
class TheoryTK:
    """The derived theory: structural plus logical operations, and the fixed equation schemas."""
    bigraphical: BigSignature
    operations: dict[str, SmcOperation]
    equations: tuple[str, ...] = EQUATIONS

    def __contains__(self, name: str) -> bool:
        return name in self.operations

    def __getitem__(self, name: str) -> SmcOperation:
        return self.operations[name]

    def __hash__(self):
        return hash(self.bigraphical)

    @property
    def signature(self) -> list[SmcOperation]:
        return list(self.operations.values())


def derive_theory(s: BigSignature) -> TheoryTK:
    validate_signature(s)
    ops = dict(STRUCTURAL_OPERATIONS)
    for k in s.controls:
        ops[k.name] = control_operation(k)
    return TheoryTK(s, ops)
