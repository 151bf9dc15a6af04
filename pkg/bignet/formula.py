"""
IMLL formulas over the sorts `t` and `v`, their classical image, and switchings.

Formulas are immutable trees. Leaves are addressed by :data:`LeafPath` strings over
`"L"` and `"R"`; the empty string addresses the root.
"""
import enum
import itertools
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Union

from bignet.util import BignetError

LeafPath = str
"""A path from a formula root to one of its vertices, e.g. `"LR"`."""

SORTS = ("t", "v")
UNIT = "I"


class FormulaSyntaxError(BignetError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.position = position


class UnresolvedPath(BignetError):
    pass


class Polarity(enum.Enum):
    Positive = "+"
    Negative = "-"

    def __invert__(self) -> "Polarity":
        return Polarity.Negative if self is Polarity.Positive else Polarity.Positive


@dataclass(frozen=True)
class Leaf:
    label: str  # "t", "v" or "I"

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Tensor:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return print_formula(self)


@dataclass(frozen=True)
class Lolli:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return print_formula(self)


Formula = Union[Leaf, Tensor, Lolli]

T = Leaf("t")
V = Leaf("v")
I = Leaf(UNIT)


def tensor_of(factors: Sequence[Formula]) -> Formula:
    """Right-associated tensor of `factors`; the empty tensor is `I`."""
    if not factors:
        return I
    result = factors[-1]
    for f in reversed(factors[:-1]):
        result = Tensor(f, result)
    return result


def v_power(n: int) -> Formula:
    """`v ⊗ ... ⊗ v` (n times), right-associated, with `v^0 = I`."""
    return tensor_of([V] * n)


def factor_path(k: int, n: int) -> LeafPath:
    """Path of the `k`-th factor inside a right-associated tensor of `n` factors."""
    assert 0 <= k < n
    if k == n - 1:
        return "R" * k
    return "R" * k + "L"


def subformula(f: Formula, path: LeafPath) -> Formula:
    """Return the vertex of `f` at `path`."""
    for step in path:
        if isinstance(f, Leaf):
            raise UnresolvedPath(f"path {path!r} walks past a leaf")
        if step == "L":
            f = f.left
        elif step == "R":
            f = f.right
        else:
            raise UnresolvedPath(f"invalid path step {step!r} in {path!r}")
    return f


def leaf_label(f: Formula, path: LeafPath) -> str:
    """Return the label of the leaf at `path`, raising :class:`UnresolvedPath` if it is no leaf."""
    sub = subformula(f, path)
    if not isinstance(sub, Leaf):
        raise UnresolvedPath(f"path {path!r} does not end at a leaf of {print_formula(f)}")
    return sub.label


def leaves(f: Formula) -> list[tuple[LeafPath, str]]:
    """In-order enumeration of the leaves of `f`."""
    out = []

    def walk(g: Formula, path: str):
        if isinstance(g, Leaf):
            out.append((path, g.label))
        else:
            walk(g.left, path + "L")
            walk(g.right, path + "R")

    walk(f, "")
    return out


def local_polarity(f: Formula, path: LeafPath) -> Polarity:
    """
    Sign of the leaf at `path`: positive iff the path passes through the left child
    of an even number of `⊸` vertices.
    """
    leaf_label(f, path)
    lefts = 0
    g = f
    for step in path:
        if isinstance(g, Lolli) and step == "L":
            lefts += 1
        g = g.left if step == "L" else g.right
    return Polarity.Positive if lefts % 2 == 0 else Polarity.Negative


def assemble_morphism_formula(
        dom: Formula,
        cell_types: Sequence[tuple[Formula, Formula]],
        cod: Formula,
) -> Formula:
    """
    The formula whose leaves are the ports of a morphism:
    `(dom ⊗ ⊗_c (α_c ⊸ β_c)) ⊸ cod`, or `dom ⊸ cod` without cells.
    """
    if not cell_types:
        return Lolli(dom, cod)
    cells = tensor_of([Lolli(a, b) for a, b in cell_types])
    return Lolli(Tensor(dom, cells), cod)


# Concrete syntax

_token = re.compile(r"\s*(?:(-o)|(\*)|(\()|(\))|([tvI]))")


def parse_formula(text: str) -> Formula:
    """
    Parse the concrete syntax: `*` for ⊗, `-o` for ⊸, `I`, `t`, `v` and parentheses.
    `-o` is right-associative, `*` binds tighter than `-o` and is right-associated.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _token.match(text, pos)
        if not m:
            raise FormulaSyntaxError("unexpected character", text, pos)
        tokens.append((m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("$", len(text)))
    i = 0

    def peek() -> str:
        return tokens[i][0]

    def take(expected: str) -> None:
        nonlocal i
        tok, at = tokens[i]
        if tok != expected:
            raise FormulaSyntaxError(f"expected {expected!r}, got {tok!r}", text, at)
        i += 1

    def lolli() -> Formula:
        left = tensor()
        if peek() == "-o":
            take("-o")
            return Lolli(left, lolli())
        return left

    def tensor() -> Formula:
        left = atom()
        if peek() == "*":
            take("*")
            return Tensor(left, tensor())
        return left

    def atom() -> Formula:
        nonlocal i
        tok, at = tokens[i]
        if tok == "(":
            take("(")
            inner = lolli()
            take(")")
            return inner
        if tok in ("t", "v", "I"):
            i += 1
            return Leaf(tok)
        raise FormulaSyntaxError(f"unexpected {'end of input' if tok == '$' else repr(tok)}", text, at)

    result = lolli()
    if peek() != "$":
        raise FormulaSyntaxError(f"trailing {peek()!r}", text, tokens[i][1])
    return result


def print_formula(f: Formula) -> str:
    """Inverse of :func:`parse_formula`, using as few parentheses as possible."""
    if isinstance(f, Leaf):
        return f.label
    if isinstance(f, Lolli):
        left = print_formula(f.left)
        if isinstance(f.left, Lolli):
            left = f"({left})"
        return f"{left} -o {print_formula(f.right)}"
    left = print_formula(f.left)
    if not isinstance(f.left, Leaf):
        left = f"({left})"
    right = print_formula(f.right)
    if isinstance(f.right, Lolli):
        right = f"({right})"
    return f"{left} * {right}"


# Classical linear logic

@dataclass(frozen=True)
class Atom:
    """A classical leaf: `x`, `x⊥` (negated), `1` or `⊥`."""
    label: str  # "t", "v", "1" or "⊥"
    negated: bool = False

    def __str__(self):
        return f"{self.label}⊥" if self.negated else self.label


@dataclass(frozen=True)
class CTensor:
    left: "ClassicalFormula"
    right: "ClassicalFormula"


@dataclass(frozen=True)
class Par:
    left: "ClassicalFormula"
    right: "ClassicalFormula"


ClassicalFormula = Union[Atom, CTensor, Par]
ONE = Atom("1")
BOTTOM = Atom("⊥")


def dual(c: ClassicalFormula) -> ClassicalFormula:
    """De Morgan dual; keeps the left-to-right order of leaves."""
    if isinstance(c, Atom):
        if c is ONE or c == ONE:
            return BOTTOM
        if c == BOTTOM:
            return ONE
        return Atom(c.label, not c.negated)
    if isinstance(c, CTensor):
        return Par(dual(c.left), dual(c.right))
    return CTensor(dual(c.left), dual(c.right))


def to_classical(f: Formula) -> ClassicalFormula:
    """Translate `A ⊸ B` to `A⊥ ⅋ B`, homomorphically elsewhere; `I` becomes `1`."""
    if isinstance(f, Leaf):
        return ONE if f.label == UNIT else Atom(f.label)
    if isinstance(f, Tensor):
        return CTensor(to_classical(f.left), to_classical(f.right))
    return Par(dual(to_classical(f.left)), to_classical(f.right))


def par_paths(c: ClassicalFormula) -> list[LeafPath]:
    """Paths of the ⅋ vertices of `c`, in in-order position."""
    out = []

    def walk(g, path):
        if isinstance(g, Atom):
            return
        walk(g.left, path + "L")
        if isinstance(g, Par):
            out.append(path)
        walk(g.right, path + "R")

    walk(c, "")
    return out


def internal_vertices(c: ClassicalFormula) -> list[tuple[LeafPath, ClassicalFormula]]:
    """All non-leaf vertices of `c` with their paths, in pre-order."""
    out = []

    def walk(g, path):
        if isinstance(g, Atom):
            return
        out.append((path, g))
        walk(g.left, path + "L")
        walk(g.right, path + "R")

    walk(c, "")
    return out


class Choice(enum.Enum):
    KeepLeft = "L"
    KeepRight = "R"


Switching = tuple[Choice, ...]
"""One choice per ⅋ vertex, in the order of :func:`par_paths`."""


def enumerate_switchings(c: ClassicalFormula) -> Iterator[Switching]:
    """All `2^#⅋` switchings, lexicographically (KeepLeft before KeepRight) over in-order ⅋ vertices."""
    n = len(par_paths(c))
    return itertools.product((Choice.KeepLeft, Choice.KeepRight), repeat=n)


def count_switchings(c: ClassicalFormula) -> int:
    # Python integers are exact, so this never overflows.
    return 2 ** len(par_paths(c))
