"""Integer partitions: orders, conjugation, hooks, cores and quotients,
regularity and James regularization, enumeration.

Partitions are immutable tuples of weakly decreasing positive integers, so
they hash, sort and compare like tuples.  For two partitions of the same
size, tuple comparison *is* the lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class PartitionError(ValueError):
    """Raised for malformed partitions or violated preconditions."""


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped, so ``Partition([3, 1, 0]) == Partition([3, 1])``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise PartitionError(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    size = n

    def __repr__(self) -> str:
        return "Partition(%s)" % (list(self),)

    def __str__(self) -> str:
        if not self:
            return "()"
        return "(" + ",".join(map(str, self)) + ")"

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """1-indexed (row, col) cells in row-reading order."""
        for i, row in enumerate(self, 1):
            for j in range(1, row + 1):
                yield i, j


class PMultipartition(tuple):
    """A tuple of exactly ``p`` partitions (the components of a p-quotient)."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = tuple(Partition(c) for c in components)
        if len(comps) < 2:
            raise PartitionError("a p-multipartition needs at least 2 components")
        return super().__new__(cls, comps)

    @property
    def p(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(c.n for c in self)


@dataclass(frozen=True)
class CoreQuotientPair:
    core: Partition
    quotient: PMultipartition
    p: int

    def __post_init__(self):
        if len(self.quotient) != self.p:
            raise PartitionError("quotient length must equal p")

    @property
    def weight(self) -> int:
        return self.quotient.size

    @property
    def n(self) -> int:
        return self.core.n + self.p * self.quotient.size


def as_partition(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def _check_same_size(lam: Sequence[int], mu: Sequence[int]) -> None:
    if sum(lam) != sum(mu):
        raise PartitionError(f"size mismatch: |{tuple(lam)}| != |{tuple(mu)}|")


# -- basic shape data ------------------------------------------------------

def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for part in lam if part > j) for j in range(lam[0]))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff every partial sum of ``lam`` is at most that of ``mu``."""
    _check_same_size(lam, mu)
    s = t = 0
    for k in range(max(len(lam), len(mu))):
        s += lam[k] if k < len(lam) else 0
        t += mu[k] if k < len(mu) else 0
        if s > t:
            return False
    return True


def lex_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    _check_same_size(lam, mu)
    return tuple(lam) <= tuple(mu)


def lexprime_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam <=' mu`` iff ``lam' >= mu'`` lexicographically."""
    _check_same_size(lam, mu)
    return tuple(conjugate(mu)) <= tuple(conjugate(lam))


def is_p_regular(lam: Sequence[int], p: int) -> bool:
    """No ``p`` equal positive parts."""
    if p < 2:
        raise PartitionError("p must be at least 2")
    run = 1
    for a, b in zip(lam, lam[1:]):
        run = run + 1 if a == b else 1
        if run >= p:
            return False
    return True


def is_p_restricted(lam: Sequence[int], p: int) -> bool:
    return is_p_regular(conjugate(lam), p)


def hook_lengths(lam: Sequence[int]) -> list[list[int]]:
    """Table ``h[i][j]`` (0-indexed) of hook lengths."""
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
            for i in range(len(lam))]


def diagonal_hooks(lam: Sequence[int]) -> tuple[int, ...]:
    """Hook lengths of the diagonal cells ``(1,1), ..., (k,k)``."""
    conj = conjugate(lam)
    out = []
    for i in range(len(lam)):
        if lam[i] <= i:
            break
        out.append(lam[i] + conj[i] - 2 * i - 1)
    return tuple(out)


# -- abacus, cores and quotients ------------------------------------------

def beta_numbers(lam: Sequence[int], r: int) -> list[int]:
    """First-column hook lengths with ``r`` beads: ``lam_i + r - i`` (1-indexed)."""
    if r < len(lam):
        raise PartitionError("need at least as many beads as parts")
    parts = list(lam) + [0] * (r - len(lam))
    return [parts[i] + r - 1 - i for i in range(r)]


def from_beta_numbers(beta: Iterable[int]) -> Partition:
    bs = sorted(beta, reverse=True)
    r = len(bs)
    return Partition(bs[i] - (r - 1 - i) for i in range(r))


def _bead_count(lam: Sequence[int], p: int, extra: int = 0) -> int:
    # number of beads is a multiple of p; this fixes the runner labelling
    r = len(lam) + extra
    return r + (-r) % p


def abacus(lam: Sequence[int], p: int, r: int | None = None) -> list[list[int]]:
    """Bead levels on each of the ``p`` runners (``r`` beads, r % p == 0)."""
    if r is None:
        r = _bead_count(lam, p)
    runners: list[list[int]] = [[] for _ in range(p)]
    for b in beta_numbers(lam, r):
        runners[b % p].append(b // p)
    for run in runners:
        run.sort()
    return runners


def _runner_partition(levels: Sequence[int]) -> Partition:
    return from_beta_numbers(levels)


def p_core(lam: Sequence[int], p: int) -> Partition:
    """Slide every bead to the top of its runner."""
    if p < 2:
        raise PartitionError("p must be at least 2")
    r = _bead_count(lam, p)
    beta = []
    for i, levels in enumerate(abacus(lam, p, r)):
        beta.extend(k * p + i for k in range(len(levels)))
    return from_beta_numbers(beta)


def p_quotient(lam: Sequence[int], p: int) -> PMultipartition:
    """Runner ``i`` (positions congruent to ``i`` mod p) gives component ``i``.

    The bead count is a multiple of ``p``.  With this convention
    (9,2,1^7) has 3-quotient ((1,1,1), (), (3)).
    """
    if p < 2:
        raise PartitionError("p must be at least 2")
    return PMultipartition(_runner_partition(levels) for levels in abacus(lam, p))


def p_weight(lam: Sequence[int], p: int) -> int:
    return (sum(lam) - p_core(lam, p).n) // p


def is_p_core(lam: Sequence[int], p: int) -> bool:
    return p_core(lam, p) == tuple(lam)


def core_quotient(lam: Sequence[int], p: int) -> CoreQuotientPair:
    return CoreQuotientPair(p_core(lam, p), p_quotient(lam, p), p)


def from_core_quotient(cq: CoreQuotientPair) -> Partition:
    core, quotient, p = as_partition(cq.core), cq.quotient, cq.p
    if not is_p_core(core, p):
        raise PartitionError(f"{core} is not a {p}-core")
    if len(quotient) != p:
        raise PartitionError("quotient must have exactly p components")
    longest = max((len(q) for q in quotient), default=0)
    r = _bead_count(core, p, extra=p * longest)
    counts = [len(levels) for levels in abacus(core, p, r)]
    beta = []
    for i, (comp, c) in enumerate(zip(quotient, counts)):
        parts = list(comp) + [0] * (c - len(comp))
        beta.extend((parts[j] + c - 1 - j) * p + i for j in range(c))
    return from_beta_numbers(beta)


def conjugate_core_quotient_law_check(lam: Sequence[int], p: int) -> bool:
    """Conjugation conjugates the core and reverse-conjugates the quotient."""
    conj = conjugate(lam)
    if p_core(conj, p) != conjugate(p_core(lam, p)):
        return False
    q = p_quotient(lam, p)
    return p_quotient(conj, p) == tuple(conjugate(c) for c in reversed(q))


# -- regularization --------------------------------------------------------

def ladder(i: int, j: int, p: int) -> int:
    """p-ladder of the 1-indexed cell (i, j); residue of the cell is -ladder mod p."""
    return (i - 1) + (p - 1) * (j - 1)


def regularize(lam: Sequence[int], p: int) -> Partition:
    """James regularization: push every cell as high as it goes on its ladder."""
    if p < 2:
        raise PartitionError("p must be at least 2")
    counts: dict[int, int] = {}
    for i, row in enumerate(lam, 1):
        for j in range(1, row + 1):
            l = ladder(i, j, p)
            counts[l] = counts.get(l, 0) + 1
    rows: dict[int, int] = {}
    for l, k in counts.items():
        # topmost cells of ladder l have row index i-1 = l mod (p-1) + t(p-1)
        i = l % (p - 1) + 1
        for _ in range(k):
            j = (l - (i - 1)) // (p - 1) + 1
            rows[i] = max(rows.get(i, 0), j)
            i += p - 1
    if not rows:
        return Partition()
    out = Partition(rows.get(i, 0) for i in range(1, max(rows) + 1))
    if out.n != sum(lam):  # pragma: no cover - guards the ladder arithmetic
        raise AssertionError("regularization lost cells")
    return out


# -- enumeration -----------------------------------------------------------

def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in lex-descending order."""
    if n < 0:
        raise PartitionError("n must be nonnegative")
    for parts in _partitions(n, n):
        yield Partition(parts)


def p_regular_partitions_of(n: int, p: int) -> Iterator[Partition]:
    for lam in partitions_of(n):
        if is_p_regular(lam, p):
            yield lam


def self_conjugate_partitions_of(n: int) -> Iterator[Partition]:
    for lam in partitions_of(n):
        if conjugate(lam) == lam:
            yield lam


def p_cores_of(n: int, p: int) -> list[Partition]:
    return [lam for lam in partitions_of(n) if is_p_core(lam, p)]


def parse_partition(text: str) -> Partition:
    """Parse ``"10,4,4,1"`` (also tolerates brackets, spaces and ``1^7``); ``""`` is empty."""
    text = text.strip().strip("[]()").strip()
    if not text:
        return Partition()
    try:
        parts = []
        for tok in text.replace(" ", ",").split(","):
            if not tok:
                continue
            part, _, mult = tok.partition("^")
            parts += [int(part)] * (int(mult) if mult else 1)
        return Partition(parts)
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc
