"""Binary words over an alphabet of naturals.

A binary word is the unit ``e``, a leaf ``x`` or a bracketed pair ``(w*u)``.
The same trees, with a second binary symbol ``(w>u)``, serve as terms of the
two-coloured action operad: ``(w>u)`` is the action of ``w`` on ``u``.

The type of a word is its left-to-right sequence of leaves.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Mapping, Sequence, Union


@dataclass(frozen=True, slots=True)
class Unit:
    def __repr__(self) -> str:
        return "e"


@dataclass(frozen=True, slots=True)
class Leaf:
    x: int

    def __repr__(self) -> str:
        return str(self.x)


@dataclass(frozen=True, slots=True)
class Node:
    left: "BinWord"
    right: "BinWord"

    def __repr__(self) -> str:
        return f"({self.left!r}*{self.right!r})"


@dataclass(frozen=True, slots=True)
class ActNode:
    left: "BinWord"
    right: "BinWord"

    def __repr__(self) -> str:
        return f"({self.left!r}>{self.right!r})"


BinWord = Union[Unit, Leaf, Node, ActNode]
E = Unit()
TypeWord = tuple[int, ...]


def leaf(x: int) -> Leaf:
    return Leaf(x)


def node(w: BinWord, u: BinWord) -> Node:
    return Node(w, u)


def render(w: BinWord) -> str:
    return repr(w)


class ParseError(ValueError):
    pass


def parse(text: str) -> BinWord:
    pos = 0
    s = text.replace(" ", "")

    def term() -> BinWord:
        nonlocal pos
        if pos >= len(s):
            raise ParseError(f"unexpected end of input in {text!r}")
        c = s[pos]
        if c == "e":
            pos += 1
            return E
        if c.isdigit():
            start = pos
            while pos < len(s) and s[pos].isdigit():
                pos += 1
            return Leaf(int(s[start:pos]))
        if c == "(":
            pos += 1
            left = term()
            if pos >= len(s) or s[pos] not in "*>":
                raise ParseError(f"expected '*' or '>' at {pos} in {text!r}")
            op = s[pos]
            pos += 1
            right = term()
            if pos >= len(s) or s[pos] != ")":
                raise ParseError(f"expected ')' at {pos} in {text!r}")
            pos += 1
            return Node(left, right) if op == "*" else ActNode(left, right)
        raise ParseError(f"unexpected {c!r} at {pos} in {text!r}")

    w = term()
    if pos != len(s):
        raise ParseError(f"trailing input at {pos} in {text!r}")
    return w


def type_of(w: BinWord) -> TypeWord:
    out: list[int] = []
    stack = [w]
    while stack:
        t = stack.pop()
        if isinstance(t, Leaf):
            out.append(t.x)
        elif isinstance(t, (Node, ActNode)):
            stack.append(t.right)
            stack.append(t.left)
    return tuple(out)


def leaves(w: BinWord) -> TypeWord:
    return type_of(w)


def occurrences(w: BinWord, letter: int = 1) -> int:
    return sum(1 for x in type_of(w) if x == letter)


def is_linear(w: BinWord, alphabet: Sequence[int]) -> bool:
    t = type_of(w)
    return len(t) == len(alphabet) and sorted(t) == sorted(alphabet)


def depth(w: BinWord) -> int:
    if isinstance(w, (Node, ActNode)):
        return 1 + max(depth(w.left), depth(w.right))
    return 0


def units(w: BinWord) -> int:
    """Number of occurrences of e."""
    if isinstance(w, Unit):
        return 1
    if isinstance(w, (Node, ActNode)):
        return units(w.left) + units(w.right)
    return 0


def substitute(u: BinWord, args: Sequence[BinWord] | Mapping[int, BinWord]) -> BinWord:
    """Replace each leaf i of u by args[i] (1-based for sequences)."""
    if isinstance(args, Mapping):
        lookup = args
    else:
        lookup = {i: a for i, a in enumerate(args, 1)}

    def go(t: BinWord) -> BinWord:
        if isinstance(t, Leaf):
            try:
                return lookup[t.x]
            except KeyError:
                raise ValueError(f"leaf {t.x} has no substitute") from None
        if isinstance(t, Node):
            return Node(go(t.left), go(t.right))
        if isinstance(t, ActNode):
            return ActNode(go(t.left), go(t.right))
        return t

    return go(u)


def relabel(w: BinWord, mapping: Mapping[int, int]) -> BinWord:
    return substitute(w, {x: Leaf(y) for x, y in mapping.items()})


def is_plain(w: BinWord) -> bool:
    """True when w uses no action nodes."""
    if isinstance(w, ActNode):
        return False
    if isinstance(w, Node):
        return is_plain(w.left) and is_plain(w.right)
    return True


@lru_cache(maxsize=None)
def _words(alphabet: tuple[int, ...], d: int) -> tuple[BinWord, ...]:
    base: tuple[BinWord, ...] = (E,) + tuple(Leaf(x) for x in alphabet)
    if d == 0:
        return base
    smaller = _words(alphabet, d - 1)
    return base + tuple(Node(a, b) for a, b in product(smaller, repeat=2))


def words_up_to_depth(alphabet: Sequence[int], d: int) -> tuple[BinWord, ...]:
    """All plain binary words over the alphabet with depth <= d."""
    return _words(tuple(alphabet), d)


def iter_bracketings(items: Sequence[BinWord]) -> Iterator[BinWord]:
    """All full binary trees whose leaf sequence is ``items``."""
    n = len(items)
    if n == 1:
        yield items[0]
        return
    for k in range(1, n):
        for left in iter_bracketings(items[:k]):
            for right in iter_bracketings(items[k:]):
                yield Node(left, right)


def right_assoc(items: Sequence[int]) -> BinWord:
    """x1*(x2*(...*xk)), with e for the empty sequence."""
    if not items:
        return E
    w: BinWord = Leaf(items[-1])
    for x in reversed(items[:-1]):
        w = Node(Leaf(x), w)
    return w
