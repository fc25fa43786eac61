"""Cyclically ordered partitions of ``[m] = {1, ..., m}``.

A :class:`CyclicPartition` stores its blocks in counterclockwise order,
rotated so that the block holding ``m`` comes last. That rotation is the
canonical form: equality, hashing, text output and enumeration all use it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from cyclop import kernels
from cyclop.errors import GroundSetMismatch, MalformedPartition, NotAVertexLabel

Block = tuple[int, ...]


@dataclass(frozen=True, order=True)
class CyclicPartition:
    m: int
    blocks: tuple[Block, ...]

    @property
    def p(self) -> int:
        """Number of blocks."""
        return len(self.blocks)

    @property
    def is_vertex(self) -> bool:
        return self.p == self.m

    @property
    def code(self) -> tuple[int, ...]:
        """Block index of each element ``1..m``, in canonical order."""
        out = [0] * self.m
        for k, block in enumerate(self.blocks):
            for e in block:
                out[e - 1] = k
        return tuple(out)

    @property
    def text(self) -> str:
        return "|".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks)

    def __str__(self) -> str:
        return self.text

    def block_of(self, e: int) -> Block:
        for block in self.blocks:
            if e in block:
                return block
        raise KeyError(e)

    def refines(self, coarse: CyclicPartition) -> bool:
        return refines(self, coarse)

    def relabel(self, mapping) -> CyclicPartition:
        """Apply ``mapping`` (callable or dict on ``1..m``) to every element."""
        f = mapping if callable(mapping) else mapping.__getitem__
        return canonicalize([{f(e) for e in b} for b in self.blocks], self.m)


def canonicalize(blocks: Iterable[Iterable[int]], m: int | None = None) -> CyclicPartition:
    """Validate a counterclockwise block list and rotate the ``m``-block last."""
    raw = [tuple(sorted(set(b))) for b in blocks]
    if not raw or any(not b for b in raw):
        raise MalformedPartition("blocks must be nonempty")
    elements = [e for b in raw for e in b]
    if m is None:
        m = max(elements)
    if len(elements) != len(set(elements)):
        raise MalformedPartition("blocks overlap")
    if sorted(elements) != list(range(1, m + 1)):
        raise MalformedPartition(f"blocks do not partition [1..{m}]")
    if m < 4:
        raise MalformedPartition(f"ground set must have at least 4 elements, got {m}")
    k = next(i for i, b in enumerate(raw) if m in b)
    rotated = raw[k + 1 :] + raw[: k + 1]
    return CyclicPartition(m, tuple(rotated))


def parse_label(text: str, m: int | None = None) -> CyclicPartition:
    """Parse the canonical text form, e.g. ``"[1]|[4]|[3]|[2,5]"``."""
    try:
        blocks = [
            [int(x) for x in part.strip().strip("[]").split(",")]
            for part in text.strip().split("|")
        ]
    except ValueError as exc:
        raise MalformedPartition(f"cannot parse label {text!r}") from exc
    return canonicalize(blocks, m)


def refines(fine: CyclicPartition, coarse: CyclicPartition) -> bool:
    """Orientation-preserving refinement test (reflexive)."""
    if fine.m != coarse.m:
        raise GroundSetMismatch(f"m={fine.m} vs m={coarse.m}")
    return kernels.refines_pair(fine.code, coarse.code)


def _set_partitions(elements: Sequence[int], p: int) -> Iterator[list[list[int]]]:
    # restricted-growth order: blocks appear by their smallest element
    n = len(elements)

    def grow(i: int, blocks: list[list[int]]) -> Iterator[list[list[int]]]:
        if n - i < p - len(blocks):
            return
        if i == n:
            yield [list(b) for b in blocks]
            return
        x = elements[i]
        for b in blocks:
            b.append(x)
            yield from grow(i + 1, blocks)
            b.pop()
        if len(blocks) < p:
            blocks.append([x])
            yield from grow(i + 1, blocks)
            blocks.pop()

    yield from grow(0, [])


def enumerate_partitions(m: int, p: int) -> list[CyclicPartition]:
    """All cyclic partitions of ``[m]`` into exactly ``p`` blocks, deterministic order."""
    if m < 4:
        raise MalformedPartition(f"ground set must have at least 4 elements, got {m}")
    if not 1 <= p <= m:
        raise ValueError(f"block count {p} outside 1..{m}")
    out = []
    for blocks in _set_partitions(list(range(1, m + 1)), p):
        last = next(b for b in blocks if m in b)
        others = [tuple(b) for b in blocks if b is not last]
        for perm in itertools.permutations(others):
            out.append(CyclicPartition(m, perm + (tuple(last),)))
    return out


def reduce_label(v: CyclicPartition) -> tuple[int, ...]:
    """Cut a full cyclic ordering through ``m`` and drop ``m``."""
    if not v.is_vertex:
        raise NotAVertexLabel(f"{v} has a block with more than one element")
    return tuple(b[0] for b in v.blocks[:-1])


def lift_label(order: Sequence[int]) -> CyclicPartition:
    """Inverse of :func:`reduce_label`: append ``{m}`` and close the cycle."""
    order = tuple(order)
    m = len(order) + 1
    if sorted(order) != list(range(1, m)):
        raise MalformedPartition(f"{order} is not a permutation of 1..{m - 1}")
    return CyclicPartition(m, tuple((x,) for x in order) + ((m,),))


def cycl(seq: Sequence[int]) -> tuple[int, ...]:
    """Move the last entry to the front."""
    return (seq[-1],) + tuple(seq[:-1])


def cell_vertices(label: CyclicPartition) -> frozenset[CyclicPartition]:
    """Vertex labels of the cell ``label``.

    Drop ``m`` from the last block, take every ordering inside each block,
    rotate each string by ``cycl`` up to ``|last block| - 1`` times, then put
    ``m`` back at the end.
    """
    m = label.m
    last = [e for e in label.blocks[-1] if e != m]
    parts = [itertools.permutations(b) for b in label.blocks[:-1]]
    parts.append(itertools.permutations(last))
    out = set()
    for choice in itertools.product(*parts):
        string = tuple(itertools.chain.from_iterable(choice))
        for _ in range(len(label.blocks[-1])):
            out.add(lift_label(string))
            string = cycl(string)
    return frozenset(out)
