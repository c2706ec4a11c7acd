"""Integer partitions as plain tuples of weakly decreasing positive integers.

A partition is always a tuple like ``(3, 1, 1)``; trailing zeros are never
stored, and the empty partition is ``()``.  Everything here is a pure
function of that tuple, so results can be cached and shared freely.
"""

from fractions import Fraction
from functools import cache
from math import factorial

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing tuple of positive integers."""
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {parts!r}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse the serialized form ``"3,1,1"``; the empty string is ``()``."""
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(p) for p in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def size(lam: Partition) -> int:
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    """Conjugate diagram: column lengths become row lengths."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def n_stat(lam: Partition) -> int:
    """The weighted row statistic sum((i-1) * lam_i)."""
    return sum(i * p for i, p in enumerate(lam))


def hook_lengths(lam: Partition) -> list[int]:
    """All hook lengths, one per box (arm + leg + 1), in row-major order."""
    conj = transpose(lam)
    return [
        lam[i] - j + conj[j - 1] - i
        for i in range(len(lam))
        for j in range(1, lam[i] + 1)
    ]


def z_factor(rho: Partition) -> int:
    """Centralizer order of a permutation with cycle type ``rho``."""
    z = 1
    for part in set(rho):
        m = rho.count(part)
        z *= part**m * factorial(m)
    return z


def addable_corners(lam: Partition) -> list[tuple[int, int]]:
    """1-indexed (row, column) positions where one box may be added."""
    corners = []
    for i in range(len(lam)):
        if i == 0 or lam[i - 1] > lam[i]:
            corners.append((i + 1, lam[i] + 1))
    corners.append((len(lam) + 1, 1))
    return corners


def add_box(lam: Partition, row: int) -> Partition:
    """Add a box in the given 1-indexed row (must be an addable corner)."""
    if row == len(lam) + 1:
        return lam + (1,)
    if not (1 <= row <= len(lam)) or (row > 1 and lam[row - 2] == lam[row - 1]):
        raise ValueError(f"row {row} is not an addable corner of {lam}")
    return lam[: row - 1] + (lam[row - 1] + 1,) + lam[row:]


def box_additions(lam: Partition) -> list[tuple[Partition, int]]:
    """All one-box extensions, as (new partition, column of the new box)."""
    return [(add_box(lam, row), col) for row, col in addable_corners(lam)]


def box_removals(lam: Partition) -> list[Partition]:
    """All partitions obtained by removing a single corner box."""
    out = []
    for i in range(len(lam)):
        if i + 1 == len(lam) or lam[i] > lam[i + 1]:
            mu = lam[:i] + (lam[i] - 1,) + lam[i + 1 :]
            out.append(tuple(p for p in mu if p > 0))
    return out


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """Dominance order: partial sums of ``lam`` never exceed those of ``mu``."""
    if size(lam) != size(mu):
        raise ValueError("dominance compares partitions of equal size")
    total_l = total_m = 0
    for k in range(max(len(lam), len(mu))):
        total_l += lam[k] if k < len(lam) else 0
        total_m += mu[k] if k < len(mu) else 0
        if total_l > total_m:
            return False
    return True


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            extend(prefix, remaining - part, part)
            prefix.pop()

    extend([], n, n)
    return tuple(out)


def conj_prefix(lam: Partition, j: int) -> int:
    """Column length lam'_j (number of parts >= j); j >= 1."""
    return sum(1 for p in lam if p >= j)


def q_power(q: Fraction, e: int) -> Fraction:
    """q**e for exact rational q and possibly negative integer e."""
    q = Fraction(q)
    return q**e if e >= 0 else 1 / q ** (-e)
