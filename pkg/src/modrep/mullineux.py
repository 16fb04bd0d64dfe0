"""The Mullineux involution on p-regular partitions.

Two independent routes:

* :func:`mullineux` -- Mullineux's p-rim stripping.  Each p-regular partition
  has a Mullineux symbol (columns ``(a_i, r_i)`` = size of the i-th p-rim and
  number of rows before stripping it); the involution maps column
  ``(a, r)`` to ``(a, a - r + eps)`` with ``eps = 0`` iff ``p | a``, and the
  partition is rebuilt from the new symbol column by column.
* :func:`mullineux_alt` -- Kleshchev's good-node description: strip good
  nodes down to the empty partition, recording residues, then rebuild
  applying ``f~_{-i}`` for each recorded residue ``i``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import (
    Partition,
    PartitionError,
    as_partition,
    conjugate,
    is_p_regular,
    p_core,
    p_regular_partitions_of,
)


def _require_regular(lam: Sequence[int], p: int) -> None:
    if p < 2:
        raise PartitionError("p must be at least 2")
    if not is_p_regular(lam, p):
        raise PartitionError(f"{tuple(lam)} is not {p}-regular")


# -- p-rims and the Mullineux symbol --------------------------------------

def _rim_walk(lam: Sequence[int], i: int) -> list[tuple[int, int]]:
    """Rim cells from the right end of row ``i`` (0-indexed) down to the bottom left."""
    cells = []
    r, c = i, lam[i] - 1
    while True:
        cells.append((r, c))
        if r + 1 < len(lam) and lam[r + 1] > c:
            r += 1
        elif c > 0:
            c -= 1
        else:
            return cells


def p_rim(lam: Sequence[int], p: int) -> list[tuple[int, int]]:
    """The p-rim: consecutive p-segments of the rim, each new segment
    starting at the end of the row below the previous segment."""
    cells: list[tuple[int, int]] = []
    row = 0
    while row < len(lam):
        segment = _rim_walk(lam, row)[:p]
        cells.extend(segment)
        row = segment[-1][0] + 1
    return cells


def _remove_cells(lam: Sequence[int], cells) -> Partition:
    rows = list(lam)
    for r, _ in cells:
        rows[r] -= 1
    return Partition(sorted(rows, reverse=True))


def mullineux_symbol(lam: Sequence[int], p: int) -> tuple[tuple[int, int], ...]:
    """Columns ``(|p-rim|, number of rows)`` until the partition is empty."""
    _require_regular(lam, p)
    lam = as_partition(lam)
    cols = []
    while lam:
        rim = p_rim(lam, p)
        cols.append((len(rim), len(lam)))
        lam = _remove_cells(lam, rim)
    return tuple(cols)


def _extensions(inner: Partition, size: int, rows: int):
    """Partitions with ``rows`` rows and ``size`` cells containing ``inner``,
    whose skew part contains no 2x2 square (a rim can never contain one)."""
    inner_rows = list(inner) + [0] * (rows - len(inner))
    if len(inner) > rows:
        return
    out: list[int] = []

    def rec(k: int, remaining: int):
        if k == rows:
            if remaining == 0:
                yield Partition(out)
            return
        lo = max(inner_rows[k], 1)
        hi = inner_rows[k] + remaining
        if k:
            # a rim holds no 2x2 square, so row k ends at most one column
            # past the old end of row k-1
            hi = min(hi, out[-1], inner_rows[k - 1] + 1)
        for part in range(lo, hi + 1):
            out.append(part)
            yield from rec(k + 1, remaining - (part - inner_rows[k]))
            out.pop()

    yield from rec(0, size - inner.n)


def from_mullineux_symbol(symbol: Sequence[tuple[int, int]], p: int) -> Partition:
    """Rebuild the p-regular partition with the given Mullineux symbol."""
    lam = Partition()
    for a, r in reversed(tuple(symbol)):
        found = None
        for mu in _extensions(lam, lam.n + a, r):
            if not is_p_regular(mu, p):
                continue
            rim = p_rim(mu, p)
            if len(rim) == a and _remove_cells(mu, rim) == lam:
                found = mu
                break
        if found is None:
            raise PartitionError(f"no {p}-regular partition has symbol {tuple(symbol)}")
        lam = found
    return lam


@lru_cache(maxsize=65536)
def _mullineux(lam: Partition, p: int) -> Partition:
    sym = mullineux_symbol(lam, p)
    image = tuple((a, a - r + (0 if a % p == 0 else 1)) for a, r in sym)
    return from_mullineux_symbol(image, p)


def mullineux(lam: Sequence[int], p: int) -> Partition:
    """Mullineux image of a p-regular partition (rim-stripping algorithm)."""
    _require_regular(lam, p)
    return _mullineux(as_partition(lam), p)


# -- good nodes -------------------------------------------------------------

def _signature(lam: Sequence[int], i: int, p: int):
    """Addable (+1) and removable (-1) i-nodes of ``lam``, listed bottom to top
    as ``(sign, row)`` (0-indexed rows)."""
    nodes = []
    rows = list(lam)
    for r in range(len(rows), -1, -1):
        cur = rows[r] if r < len(rows) else 0
        above = rows[r - 1] if r > 0 else None
        # removable: end of row r, strictly longer than row r+1
        below = rows[r + 1] if r + 1 < len(rows) else 0
        if r < len(rows) and cur > below and (cur - 1 - r) % p == i:
            nodes.append((-1, r))
        # addable: cell (r, cur) if row above is longer
        if (above is None or above > cur) and (cur - r) % p == i:
            nodes.append((+1, r))
    return nodes


def _reduced(nodes):
    """Cancel adjacent (removable, addable) pairs read bottom to top.

    What is left reads ``+ ... + - ... -``: the surviving addables
    (lower rows) precede the surviving removables (upper rows).
    """
    stack = []
    for sign, row in nodes:
        if sign == +1 and stack and stack[-1][0] == -1:
            stack.pop()
        else:
            stack.append((sign, row))
    return stack


def good_removable(lam: Sequence[int], i: int, p: int):
    """Row of the good removable i-node, or ``None``."""
    rem = [row for sign, row in _reduced(_signature(lam, i, p)) if sign == -1]
    return rem[0] if rem else None


def good_addable(lam: Sequence[int], i: int, p: int):
    add = [row for sign, row in _reduced(_signature(lam, i, p)) if sign == +1]
    return add[-1] if add else None


def f_tilde(lam: Sequence[int], i: int, p: int) -> Partition:
    row = good_addable(lam, i, p)
    if row is None:  # pragma: no cover - every partition has an addable i-node
        raise PartitionError("no good addable node")
    rows = list(lam) + [0]
    rows[row] += 1
    return Partition(rows)


def e_tilde(lam: Sequence[int], i: int, p: int):
    row = good_removable(lam, i, p)
    if row is None:
        return None
    rows = list(lam)
    rows[row] -= 1
    return Partition(rows)


def good_node_path(lam: Sequence[int], p: int) -> list[int]:
    """Residues met when stripping good nodes down to the empty partition."""
    _require_regular(lam, p)
    lam = as_partition(lam)
    path = []
    while lam:
        for i in range(p):
            nxt = e_tilde(lam, i, p)
            if nxt is not None:
                path.append(i)
                lam = nxt
                break
        else:  # pragma: no cover - p-regular partitions always have a good node
            raise PartitionError("no good node")
    return path


@lru_cache(maxsize=65536)
def _mullineux_alt(lam: Partition, p: int) -> Partition:
    mu = Partition()
    for i in reversed(good_node_path(lam, p)):
        mu = f_tilde(mu, (-i) % p, p)
    return mu


def mullineux_alt(lam: Sequence[int], p: int) -> Partition:
    """Mullineux image via Kleshchev's good nodes."""
    _require_regular(lam, p)
    return _mullineux_alt(as_partition(lam), p)


def mullineux_fixed(n: int, p: int, core: Sequence[int] | None = None) -> list[Partition]:
    """Mullineux-fixed p-regular partitions of ``n`` (optionally with a given p-core)."""
    if p % 2 == 0:
        raise PartitionError("fixed points are only meaningful for odd p")
    core = None if core is None else as_partition(core)
    out = []
    for lam in p_regular_partitions_of(n, p):
        if core is not None and p_core(lam, p) != core:
            continue
        if mullineux(lam, p) == lam:
            out.append(lam)
    return out


def mullineux_core_law(lam: Sequence[int], p: int) -> bool:
    """The core of m(lam) is the conjugate of the core of lam."""
    return p_core(mullineux(lam, p), p) == conjugate(p_core(lam, p))
