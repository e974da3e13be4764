"""Integer partitions, multipartitions, and cell statistics.

Partitions are plain tuples of weakly decreasing positive integers (the
empty tuple is the empty partition).  Diagrams use the English convention:
row 1 is the longest, rows go downward; the arm of a cell counts cells
strictly to its right, the leg cells strictly below.  Cells are 1-based
(i, j) pairs.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def check_partition(lam):
    lam = tuple(int(x) for x in lam)
    if any(x < 1 for x in lam):
        raise ValueError(f"partition parts must be >= 1: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def size(lam):
    return sum(lam)


@lru_cache(maxsize=None)
def enumerate_partitions(n):
    """All partitions of n, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ((),)
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, maxpart), 0, -1):
            prefix.append(p)
            rec(rest - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def cells(lam):
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield (i, j)


def _check_cell(lam, cell):
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside diagram of {lam}")


def arm(lam, cell):
    _check_cell(lam, cell)
    i, j = cell
    return lam[i - 1] - j


def leg(lam, cell):
    _check_cell(lam, cell)
    i, j = cell
    return conjugate(lam)[j - 1] - i


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_leq(lam, nu):
    """lam <= nu in dominance order; both must partition the same n."""
    if sum(lam) != sum(nu):
        raise ValueError("dominance needs partitions of equal size")
    acc_l = acc_n = 0
    for i in range(max(len(lam), len(nu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_n += nu[i] if i < len(nu) else 0
        if acc_l > acc_n:
            return False
    return True


def zlambda(lam):
    """z_lambda = prod_i i^{m_i} m_i! (order of the centralizer in S_n)."""
    z = 1
    for part, group in itertools.groupby(lam):
        m = len(list(group))
        fact = 1
        for x in range(2, m + 1):
            fact *= x
        z *= part**m * fact
    return z


def nstat(lam):
    """n(lambda) = sum (i-1) * lambda_i."""
    return sum(i * part for i, part in enumerate(lam))


def hook_lengths(lam):
    return [arm(lam, s) + leg(lam, s) + 1 for s in cells(lam)]


def check_multipartition(mus):
    """A multipartition: k >= 1 partitions of one common size."""
    mus = tuple(check_partition(mu) for mu in mus)
    if not mus:
        raise ValueError("multipartition needs at least one component")
    n = sum(mus[0])
    if any(sum(mu) != n for mu in mus):
        raise ValueError(f"components must have equal size: {mus}")
    return mus


def partition_text(lam):
    return "(" + ",".join(str(p) for p in lam) + ")"


def parse_partition(s):
    s = s.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return ()
    return check_partition(tuple(int(x) for x in s.split(",")))
