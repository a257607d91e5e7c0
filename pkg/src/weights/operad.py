"""Symmetric operads on Set and their two-coloured counterparts.

Operations are values: an operation of type X is carried by a finite subset
X of the naturals and a payload whose meaning depends on the operad.

    BOT   the initial operad: only the unary identity
    BTR   linear binary words (each carrier element occurs exactly once,
          e may occur any number of times)
    LO    linear orders, stored as a word listing the carrier once
    TOP   the terminal operad: exactly one operation of each type

The coloured chain BOT2 -> ACT -> LO2 -> TOP2 uses two colours.  A coloured
operation also records the colour of every carrier element and its output
colour.  ACT terms are words built from e, ``*`` (the monoid product, colours
0,0 -> 0) and ``>`` (the action, colours 0,1 -> 1).  LO2 holds the linear
orders that arise as leaf orders of ACT terms: an output of colour 0 takes
only colour-0 inputs, an output of colour 1 takes exactly one colour-1 input
and lists it last.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Mapping, Sequence

from . import words as W
from .words import ActNode, BinWord, Leaf, Node, Unit


class Operad(enum.Enum):
    BOT = "bot"
    BTR = "btr"
    LO = "lo"
    TOP = "top"
    BOT2 = "bot2"
    ACT = "act"
    LO2 = "lo2"
    TOP2 = "top2"

    @property
    def colored(self) -> bool:
        return self in _COLORED

    @property
    def ncolors(self) -> int:
        return 2 if self.colored else 1

    @property
    def rank(self) -> int:
        return _CHAIN[self]

    @property
    def linear(self) -> bool:
        """Whether operations order their inputs (payload has a leaf order)."""
        return self in (Operad.BTR, Operad.LO, Operad.ACT, Operad.LO2)

    def __str__(self) -> str:
        return self.value


_COLORED = {Operad.BOT2, Operad.ACT, Operad.LO2, Operad.TOP2}
_CHAIN = {Operad.BOT: 0, Operad.BTR: 1, Operad.LO: 2, Operad.TOP: 3,
          Operad.BOT2: 0, Operad.ACT: 1, Operad.LO2: 2, Operad.TOP2: 3}


class OperadError(ValueError):
    pass


@dataclass(frozen=True)
class OperadOp:
    operad: Operad
    carrier: tuple[int, ...]
    payload: object = None
    colors: tuple[int, ...] = ()
    out: int = 0

    def __post_init__(self) -> None:
        _validate(self)

    def color(self, x: int) -> int:
        if not self.colors:
            return 0
        return self.colors[self.carrier.index(x)]

    @property
    def order(self) -> tuple[int, ...]:
        """Leaf order of the payload; empty for non-linear operads."""
        if self.operad in (Operad.LO, Operad.LO2):
            return self.payload  # type: ignore[return-value]
        if self.operad in (Operad.BTR, Operad.ACT):
            return W.type_of(self.payload)  # type: ignore[arg-type]
        return ()

    def __repr__(self) -> str:
        return f"{self.operad.value}[{render_op(self)}]"


def _term_color(t: BinWord, colors: Mapping[int, int]) -> int:
    if isinstance(t, Unit):
        return 0
    if isinstance(t, Leaf):
        return colors[t.x]
    left, right = _term_color(t.left, colors), _term_color(t.right, colors)
    if isinstance(t, Node):
        if (left, right) != (0, 0):
            raise OperadError(f"product node {t!r} needs two colour-0 arguments")
        return 0
    if (left, right) != (0, 1):
        raise OperadError(f"action node {t!r} needs colours (0, 1)")
    return 1


def _validate(op: OperadOp) -> None:
    carrier = op.carrier
    if list(carrier) != sorted(set(carrier)):
        raise OperadError(f"carrier {carrier} is not a strictly increasing list")
    kind = op.operad
    if kind.colored:
        if len(op.colors) != len(carrier):
            raise OperadError("coloured operation needs one colour per input")
        if any(c not in (0, 1) for c in op.colors) or op.out not in (0, 1):
            raise OperadError("colours must be 0 or 1")
    elif op.colors or op.out:
        raise OperadError(f"{kind} is not coloured")
    if kind in (Operad.TOP, Operad.TOP2):
        if op.payload is not None:
            raise OperadError("terminal operad carries no payload")
    elif kind in (Operad.BOT, Operad.BOT2):
        if len(carrier) != 1 or op.payload is not None:
            raise OperadError("the initial operad has only unary operations")
        if kind is Operad.BOT2 and op.colors[0] != op.out:
            raise OperadError("identity must preserve colour")
    elif kind in (Operad.LO, Operad.LO2):
        word = op.payload
        if not isinstance(word, tuple) or sorted(word) != list(carrier):
            raise OperadError(f"{word!r} is not a linear order on {carrier}")
        if kind is Operad.LO2:
            cols = {x: c for x, c in zip(carrier, op.colors)}
            seq = [cols[x] for x in word]
            if op.out == 0:
                ok = all(c == 0 for c in seq)
            else:
                ok = seq.count(1) == 1 and seq[-1] == 1
            if not ok:
                raise OperadError(f"colour profile {seq} -> {op.out} is not an action profile")
    elif kind is Operad.BTR:
        if not W.is_plain(op.payload) or not W.is_linear(op.payload, carrier):
            raise OperadError(f"{op.payload!r} is not a linear binary word on {carrier}")
    elif kind is Operad.ACT:
        if not W.is_linear(op.payload, carrier):
            raise OperadError(f"{op.payload!r} is not linear on {carrier}")
        cols = dict(zip(carrier, op.colors))
        if _term_color(op.payload, cols) != op.out:
            raise OperadError(f"{op.payload!r} does not have output colour {op.out}")


def make_op(operad: Operad, carrier: Sequence[int], payload: object = None,
            colors: Sequence[int] | Mapping[int, int] | None = None, out: int = 0) -> OperadOp:
    carrier_t = tuple(sorted(carrier))
    if operad.colored:
        if colors is None:
            colors_t = (0,) * len(carrier_t)
        elif isinstance(colors, Mapping):
            colors_t = tuple(colors[x] for x in carrier_t)
        else:
            colors_t = tuple(colors)
        return OperadOp(operad, carrier_t, payload, colors_t, out)
    return OperadOp(operad, carrier_t, payload)


def unit(operad: Operad, element: int, color: int = 0) -> OperadOp:
    if operad in (Operad.TOP, Operad.BOT):
        return OperadOp(operad, (element,))
    if operad in (Operad.TOP2, Operad.BOT2):
        return OperadOp(operad, (element,), None, (color,), color)
    if operad is Operad.LO:
        return OperadOp(operad, (element,), (element,))
    if operad is Operad.LO2:
        return OperadOp(operad, (element,), (element,), (color,), color)
    if operad is Operad.BTR:
        return OperadOp(operad, (element,), Leaf(element))
    return OperadOp(operad, (element,), Leaf(element), (color,), color)


def multiply(outer: OperadOp, inner: Mapping[int, OperadOp]) -> OperadOp:
    """Substitute inner[x] for every input x of outer."""
    if set(inner) != set(outer.carrier):
        raise OperadError("inner family must be indexed by the outer carrier")
    kind = outer.operad
    seen: set[int] = set()
    for x in outer.carrier:
        op = inner[x]
        if op.operad is not kind:
            raise OperadError(f"operad mismatch: {op.operad} inside {kind}")
        if seen.intersection(op.carrier):
            raise OperadError("inner carriers overlap")
        seen.update(op.carrier)
        if kind.colored and op.out != outer.color(x):
            raise OperadError(f"colour mismatch at input {x}")
    carrier = tuple(sorted(seen))
    colors: dict[int, int] = {}
    if kind.colored:
        for op in inner.values():
            colors.update(zip(op.carrier, op.colors))
    colors_t = tuple(colors[y] for y in carrier) if kind.colored else ()
    if kind in (Operad.TOP, Operad.TOP2):
        payload = None
    elif kind in (Operad.BOT, Operad.BOT2):
        (x,) = outer.carrier
        return inner[x]
    elif kind in (Operad.LO, Operad.LO2):
        payload = tuple(y for x in outer.payload for y in inner[x].payload)  # type: ignore[union-attr]
    else:
        payload = W.substitute(outer.payload, {x: inner[x].payload for x in outer.carrier})  # type: ignore[arg-type]
    return OperadOp(kind, carrier, payload, colors_t, outer.out)


def act_bijection(op: OperadOp, sigma: Mapping[int, int]) -> OperadOp:
    """Relabel the inputs of op along the bijection sigma (defined on its carrier)."""
    if set(sigma) != set(op.carrier):
        raise OperadError("bijection must be defined exactly on the carrier")
    if len(set(sigma.values())) != len(sigma):
        raise OperadError("relabelling is not injective")
    carrier = tuple(sorted(sigma.values()))
    colors_t: tuple[int, ...] = ()
    if op.operad.colored:
        inv = {y: x for x, y in sigma.items()}
        colors_t = tuple(op.color(inv[y]) for y in carrier)
    payload = op.payload
    if op.operad in (Operad.LO, Operad.LO2):
        payload = tuple(sigma[x] for x in op.payload)  # type: ignore[union-attr]
    elif op.operad in (Operad.BTR, Operad.ACT):
        payload = W.relabel(op.payload, sigma)  # type: ignore[arg-type]
    return OperadOp(op.operad, carrier, payload, colors_t, op.out)


def transport(op: OperadOp, sigma: Mapping[int, int], colors: Mapping[int, int] | None = None,
              out: int | None = None) -> OperadOp:
    """Relabel along sigma and, for coloured operads, restate the colour profile.

    Only the terminal and initial operads admit a profile change; for the
    others the requested profile must agree with the relabelled one.
    """
    moved = act_bijection(op, sigma)
    if not op.operad.colored or colors is None:
        return moved
    new_colors = tuple(colors[y] for y in moved.carrier)
    new_out = moved.out if out is None else out
    if (new_colors, new_out) == (moved.colors, moved.out):
        return moved
    if op.operad in (Operad.TOP2, Operad.BOT2):
        return OperadOp(op.operad, moved.carrier, None, new_colors, new_out)
    raise OperadError(f"cannot recolour {op!r}")


def _leaf_sequences(carrier: Sequence[int], units: int) -> Iterator[tuple[BinWord, ...]]:
    n = len(carrier)
    total = n + units
    for perm in permutations(carrier):
        for unit_slots in combinations(range(total), units):
            slots = set(unit_slots)
            it = iter(perm)
            yield tuple(W.E if i in slots else Leaf(next(it)) for i in range(total))


def _act_trees(items: Sequence[BinWord], cols: Mapping[int, int]) -> Iterator[tuple[BinWord, int]]:
    if len(items) == 1:
        t = items[0]
        yield t, (cols[t.x] if isinstance(t, Leaf) else 0)
        return
    for k in range(1, len(items)):
        for left, lc in _act_trees(items[:k], cols):
            if lc != 0:
                continue
            for right, rc in _act_trees(items[k:], cols):
                yield (Node(left, right), 0) if rc == 0 else (ActNode(left, right), 1)


def enumerate_ops(operad: Operad, carrier: Sequence[int], bound: int = 0,
                  colors: Sequence[int] | Mapping[int, int] | None = None,
                  out: int = 0) -> list[OperadOp]:
    """All operations on the carrier; BTR and ACT use at most ``bound`` units."""
    carrier_t = tuple(sorted(carrier))
    if operad.colored:
        if colors is None:
            colors = (0,) * len(carrier_t)
        cols = dict(colors) if isinstance(colors, Mapping) else dict(zip(carrier_t, colors))
        colors_t = tuple(cols[x] for x in carrier_t)
    else:
        cols, colors_t = {x: 0 for x in carrier_t}, ()
    if operad in (Operad.TOP, Operad.TOP2):
        return [OperadOp(operad, carrier_t, None, colors_t, out)]
    if operad in (Operad.BOT, Operad.BOT2):
        if len(carrier_t) != 1 or (operad.colored and colors_t[0] != out):
            return []
        return [OperadOp(operad, carrier_t, None, colors_t, out)]
    result: list[OperadOp] = []
    if operad in (Operad.LO, Operad.LO2):
        for perm in permutations(carrier_t):
            try:
                result.append(OperadOp(operad, carrier_t, perm, colors_t, out))
            except OperadError:
                continue
        return result
    for k in range(bound + 1):
        if not carrier_t and k == 0:
            continue
        for items in _leaf_sequences(carrier_t, k):
            if operad is Operad.BTR:
                for t in W.iter_bracketings(items):
                    result.append(OperadOp(operad, carrier_t, t))
            else:
                for t, c in _act_trees(items, cols):
                    if c == out:
                        result.append(OperadOp(operad, carrier_t, t, colors_t, out))
    return result


def morphism_exists(source: Operad, target: Operad) -> bool:
    return source.colored == target.colored and source.rank <= target.rank


def apply_morphism(source: Operad, target: Operad, op: OperadOp) -> OperadOp:
    """The image of op under the unique operad morphism source -> target."""
    if op.operad is not source:
        raise OperadError(f"{op!r} does not belong to {source}")
    if not morphism_exists(source, target):
        raise OperadError(f"no operad morphism {source} -> {target}")
    if source is target:
        return op
    colors_t = op.colors
    if target in (Operad.TOP, Operad.TOP2):
        return OperadOp(target, op.carrier, None, colors_t, op.out)
    if source in (Operad.BOT, Operad.BOT2):
        return unit(target, op.carrier[0], op.out)
    # BTR -> LO or ACT -> LO2
    return OperadOp(target, op.carrier, W.type_of(op.payload), colors_t, op.out)  # type: ignore[arg-type]


def render_op(op: OperadOp) -> str:
    if op.operad in (Operad.TOP, Operad.TOP2, Operad.BOT, Operad.BOT2):
        return "*"
    if op.operad in (Operad.LO, Operad.LO2):
        return " ".join(str(x) for x in op.payload)  # type: ignore[union-attr]
    return W.render(op.payload)  # type: ignore[arg-type]


def parse_op(operad: Operad, carrier: Sequence[int], text: str,
             colors: Sequence[int] | Mapping[int, int] | None = None, out: int = 0) -> OperadOp:
    text = text.strip()
    if operad in (Operad.TOP, Operad.TOP2, Operad.BOT, Operad.BOT2):
        payload = None
    elif operad in (Operad.LO, Operad.LO2):
        payload = tuple(int(t) for t in text.split())
    else:
        payload = W.parse(text)
    return make_op(operad, carrier, payload, colors, out)
