"""Finite sets (n] = {1, ..., n} and total functions between them.

Objects of the skeleton category are plain naturals; a function is stored
as its table of images.  Pullbacks are renumbered by lexicographic order of
the pairs they enumerate, so that every derived construction is
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence


@dataclass(frozen=True)
class FinFunction:
    dom: int
    cod: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dom < 0 or self.cod < 0:
            raise ValueError("negative finite set")
        if len(self.images) != self.dom:
            raise ValueError(
                f"function table has {len(self.images)} entries, expected {self.dom}")
        for y in self.images:
            if not 1 <= y <= self.cod:
                raise ValueError(f"image {y} outside (1..{self.cod})")

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __repr__(self) -> str:
        return f"FinFunction({self.dom}->{self.cod}: {list(self.images)})"

    @property
    def is_bijection(self) -> bool:
        return self.dom == self.cod and len(set(self.images)) == self.dom


def function(images: Sequence[int], cod: int) -> FinFunction:
    return FinFunction(len(images), cod, tuple(images))


def identity(n: int) -> FinFunction:
    return FinFunction(n, n, tuple(range(1, n + 1)))


def compose(f: FinFunction, g: FinFunction) -> FinFunction:
    """The composite g . f (apply f first)."""
    if f.cod != g.dom:
        raise ValueError(f"cannot compose {f} then {g}")
    return FinFunction(f.dom, g.cod, tuple(g.images[y - 1] for y in f.images))


def inverse(f: FinFunction) -> FinFunction:
    if not f.is_bijection:
        raise ValueError(f"{f} is not a bijection")
    inv = [0] * f.dom
    for x, y in enumerate(f.images, 1):
        inv[y - 1] = x
    return FinFunction(f.cod, f.dom, tuple(inv))


def fiber(f: FinFunction, y: int) -> tuple[int, ...]:
    if not 1 <= y <= f.cod:
        raise ValueError(f"{y} is not in the codomain (1..{f.cod})")
    return tuple(x for x, fx in enumerate(f.images, 1) if fx == y)


def fibers(f: FinFunction) -> list[tuple[int, ...]]:
    out: list[list[int]] = [[] for _ in range(f.cod)]
    for x, y in enumerate(f.images, 1):
        out[y - 1].append(x)
    return [tuple(b) for b in out]


def pullback_pairs(f: FinFunction, g: FinFunction) -> list[tuple[int, int]]:
    """All (x, y) with f(x) = g(y), in lexicographic order."""
    if f.cod != g.cod:
        raise ValueError("pullback of functions with different codomains")
    by_value: dict[int, list[int]] = {}
    for y, gy in enumerate(g.images, 1):
        by_value.setdefault(gy, []).append(y)
    return [(x, y) for x, fx in enumerate(f.images, 1) for y in by_value.get(fx, ())]


def pullback(f: FinFunction, g: FinFunction) -> tuple[int, FinFunction, FinFunction]:
    pairs = pullback_pairs(f, g)
    p = len(pairs)
    p1 = FinFunction(p, f.dom, tuple(x for x, _ in pairs))
    p2 = FinFunction(p, g.dom, tuple(y for _, y in pairs))
    return p, p1, p2


def coproduct(a: int, b: int) -> tuple[int, FinFunction, FinFunction]:
    """(a] + (b] = (a+b] with its two injections."""
    n = a + b
    return (n,
            FinFunction(a, n, tuple(range(1, a + 1))),
            FinFunction(b, n, tuple(range(a + 1, n + 1))))


def all_functions(n: int, m: int) -> Iterator[FinFunction]:
    for images in product(range(1, m + 1), repeat=n):
        yield FinFunction(n, m, images)


def bijections(n: int) -> Iterator[FinFunction]:
    for images in permutations(range(1, n + 1)):
        yield FinFunction(n, n, images)


def is_monotone(f: FinFunction) -> bool:
    return all(a <= b for a, b in zip(f.images, f.images[1:]))
