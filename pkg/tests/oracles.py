"""Brute-force reference implementations, independent of the package code.

Nothing here imports from ``cyclop``; tests compare package outputs with
these by converting to plain tuples.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def ordered_set_partitions(m: int, p: int):
    """All sequences of ``p`` nonempty disjoint blocks covering ``1..m``."""
    for assignment in itertools.product(range(p), repeat=m):
        if len(set(assignment)) != p:
            continue
        yield tuple(
            tuple(e for e in range(1, m + 1) if assignment[e - 1] == k) for k in range(p)
        )


def rotation_class(blocks) -> frozenset:
    return frozenset(tuple(blocks[k:] + blocks[:k]) for k in range(len(blocks)))


def cyclic_partitions(m: int, p: int) -> set[frozenset]:
    """Cyclic partitions as rotation classes of ordered partitions."""
    return {rotation_class(b) for b in ordered_set_partitions(m, p)}


def compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield [bounds[i + 1] - bounds[i] for i in range(parts)]


def refines(fine: tuple, coarse: tuple) -> bool:
    """Some rotation of ``fine`` cut into consecutive runs gives a rotation of ``coarse``."""
    targets = rotation_class(tuple(frozenset(b) for b in coarse))
    for k in range(len(fine)):
        rot = fine[k:] + fine[:k]
        for comp in compositions(len(rot), len(coarse)):
            groups, at = [], 0
            for size in comp:
                groups.append(frozenset(e for b in rot[at : at + size] for e in b))
                at += size
            if tuple(groups) in targets:
                return True
    return False


def stirling2(n: int, k: int) -> int:
    # recurrence, deliberately not the closed form used in the package
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def admissible_f_vector(lengths) -> list[int]:
    lengths = [Fraction(x) for x in lengths]
    m = len(lengths)
    half = sum(lengths) / 2
    counts = [0] * (m - 2)
    for p in range(3, m + 1):
        for cls in cyclic_partitions(m, p):
            blocks = next(iter(cls))
            if all(sum(lengths[e - 1] for e in b) < half for b in blocks):
                counts[m - p] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def permutation_points(n: int) -> set[tuple[int, ...]]:
    return set(itertools.permutations(range(1, n + 1)))


def two_face_kind(num_q: int, num_r: int) -> str:
    """Category of a 2-face of the five-element polytope from its segment counts."""
    return {(1, 2): "a", (2, 0): "b", (1, 1): "c", (3, 0): "d"}[(num_q, num_r)]
