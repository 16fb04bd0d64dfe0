"""Basic sets on decomposition-matrix models.

A :class:`DecompMatrixModel` is a labeled matrix whose entries are
nonnegative integers or ``None`` (unknown).  A :class:`BasicSetDatum`
``(B, order, psi)`` is unitriangular for a model when ``d[b, psi(b)] == 1``
for every ``b`` in ``B`` and ``d[x, M] != 0`` forces ``x <= psi^-1(M)``
for every row ``x``.  Orders are stored as ascending tuples of labels.

The twisted construction: for a base order ``<=`` on partitions, ``prec``
orders conjugate pairs by the larger member and, inside a pair, puts the
base-larger member on top; ``theta`` sends each p-regular ``lam`` either to
itself or to ``m(lam)'``; the image of ``theta`` is the set ``B~``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from pathlib import Path
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .mullineux import mullineux
from .partitions import (
    Partition,
    PartitionError,
    as_partition,
    conjugate,
    diagonal_hooks,
    dominance_leq,
    is_p_core,
    is_p_regular,
    p_core,
    p_regular_partitions_of,
    parse_partition,
    partitions_of,
    regularize,
)

UNKNOWN = None


class BasicSetError(ValueError):
    """Malformed input or a violated precondition."""


class UnknownEntryError(BasicSetError):
    def __init__(self, row, col):
        super().__init__(f"entry ({row}, {col}) is unknown")
        self.row = row
        self.col = col


# -- labels ----------------------------------------------------------------------

def _encode_label(x):
    if isinstance(x, Partition):
        return list(x)
    return x.to_json()


def _decode_label(data):
    if isinstance(data, dict):
        from .clifford import AnLabel
        return AnLabel.from_json(data)
    return Partition(data)


def _label_text(x) -> str:
    return str(x)


def _parse_label_text(text: str, kind: str):
    text = text.strip()
    if text and text[-1] in "+-":
        from .clifford import AnLabel
        return AnLabel.parse(text, kind)
    if text.startswith(("psi", "phi")):
        from .clifford import AnLabel
        return AnLabel.parse(text, kind)
    return parse_partition(text)


# -- exact linear algebra -------------------------------------------------------------

def _determinant(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def _rank(rows: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


# -- decomposition matrix models ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class DecompMatrixModel:
    """Rows x columns with entries ``int >= 0`` or ``None`` (unknown)."""

    rows: tuple
    cols: tuple
    entries: tuple
    p: int
    n: int
    core: Partition | None = None
    meta: Mapping = field(default_factory=dict)
    # submatrices need not have full rank
    check_rank: bool = field(default=True, repr=False)

    def __post_init__(self):
        rows, cols = tuple(self.rows), tuple(self.cols)
        entries = tuple(tuple(None if e is None else int(e) for e in r) for r in self.entries)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "meta", MappingProxyType(dict(self.meta)))
        if self.core is not None:
            object.__setattr__(self, "core", as_partition(self.core))
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise BasicSetError("duplicate row or column label")
        if len(entries) != len(rows) or any(len(r) != len(cols) for r in entries):
            raise BasicSetError("entries do not match the label counts")
        if any(e is not None and e < 0 for r in entries for e in r):
            raise BasicSetError("decomposition numbers are nonnegative")
        for c in cols:
            if isinstance(c, Partition) and not is_p_regular(c, self.p):
                raise BasicSetError(f"column label {c} is not {self.p}-regular")
        object.__setattr__(self, "_ri", {r: i for i, r in enumerate(rows)})
        object.__setattr__(self, "_ci", {c: j for j, c in enumerate(cols)})
        if self.check_rank and rows and cols and self.is_complete() and _rank(entries) < len(cols):
            raise BasicSetError("a complete decomposition matrix has full column rank")

    def __eq__(self, other):
        if not isinstance(other, DecompMatrixModel):
            return NotImplemented
        return (self.rows, self.cols, self.entries, self.p, self.n, self.core) == \
            (other.rows, other.cols, other.entries, other.p, other.n, other.core)

    __hash__ = None

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def has_row(self, r) -> bool:
        return r in self._ri

    def entry(self, r, c):
        try:
            return self.entries[self._ri[r]][self._ci[c]]
        except KeyError as exc:
            raise BasicSetError(f"no entry at ({r}, {c})") from exc

    def row(self, r) -> tuple:
        return self.entries[self._ri[r]]

    def column(self, c) -> dict:
        j = self._ci[c]
        return {r: self.entries[i][j] for i, r in enumerate(self.rows)}

    def is_complete(self, rows: Iterable | None = None) -> bool:
        idx = range(len(self.rows)) if rows is None else [self._ri[r] for r in rows]
        return all(e is not None for i in idx for e in self.entries[i])

    def unknown_count(self) -> int:
        return sum(e is None for r in self.entries for e in r)

    def restrict(self, rows: Iterable | None = None, cols: Iterable | None = None) -> "DecompMatrixModel":
        rows = self.rows if rows is None else tuple(rows)
        cols = self.cols if cols is None else tuple(cols)
        entries = [[self.entry(r, c) for c in cols] for r in rows]
        return DecompMatrixModel(rows, cols, entries, self.p, self.n, self.core, self.meta,
                                 check_rank=False)

    def submatrix(self, rows: Iterable, cols: Iterable) -> list[list]:
        return [[self.entry(r, c) for c in cols] for r in rows]

    # serialization

    def to_json(self) -> dict:
        out = {}
        if "provenance" in self.meta:
            out["provenance"] = self.meta["provenance"]
        out.update({
            "p": self.p,
            "n": self.n,
            "core": None if self.core is None else list(self.core),
            "rows": [_encode_label(r) for r in self.rows],
            "cols": [_encode_label(c) for c in self.cols],
            "entries": [list(r) for r in self.entries],
        })
        extra = {k: v for k, v in self.meta.items() if k != "provenance"}
        if extra:
            out["meta"] = extra
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "DecompMatrixModel":
        meta = dict(data.get("meta", {}))
        if "provenance" in data:
            meta["provenance"] = data["provenance"]
        core = data.get("core")
        return cls(
            tuple(_decode_label(r) for r in data["rows"]),
            tuple(_decode_label(c) for c in data["cols"]),
            data["entries"],
            int(data["p"]),
            int(data["n"]),
            None if core is None else Partition(core),
            meta,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        if "provenance" in self.meta:
            buf.write(f"# provenance: {self.meta['provenance']}\n")
        core = "" if self.core is None else f" core={','.join(map(str, self.core))}"
        buf.write(f"# p={self.p} n={self.n}{core}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [_label_text(c) for c in self.cols])
        for r, vals in zip(self.rows, self.entries):
            w.writerow([_label_text(r)] + ["?" if e is None else e for e in vals])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, p: int | None = None, n: int | None = None) -> "DecompMatrixModel":
        meta, core = {}, None
        body = []
        for line in text.splitlines():
            if line.startswith("#"):
                content = line[1:].strip()
                if content.startswith("provenance:"):
                    meta["provenance"] = content.split(":", 1)[1].strip()
                else:
                    for tok in content.split():
                        key, _, val = tok.partition("=")
                        if key == "p" and p is None:
                            p = int(val)
                        elif key == "n" and n is None:
                            n = int(val)
                        elif key == "core":
                            core = parse_partition(val)
            elif line.strip():
                body.append(line)
        table = list(csv.reader(body))
        if not table:
            raise BasicSetError("empty CSV matrix")
        cols = tuple(_parse_label_text(t, "col") for t in table[0][1:])
        rows, entries = [], []
        for rec in table[1:]:
            rows.append(_parse_label_text(rec[0], "row"))
            entries.append([None if t.strip() == "?" else int(t) for t in rec[1:]])
        if p is None:
            raise BasicSetError("CSV matrix needs p (header '# p=.. n=..' or argument)")
        if n is None:
            n = rows[0].n if rows and isinstance(rows[0], Partition) else 0
        return cls(tuple(rows), cols, entries, p, n, core, meta)

    @classmethod
    def load(cls, path) -> "DecompMatrixModel":
        path = Path(path)
        text = path.read_text()
        if path.suffix.lower() == ".csv":
            return cls.from_csv(text)
        return cls.from_json(json.loads(text))

    def save(self, path) -> None:
        path = Path(path)
        if path.suffix.lower() == ".csv":
            path.write_text(self.to_csv())
        else:
            path.write_text(json.dumps(self.to_json(), indent=1) + "\n")


# -- orders ----------------------------------------------------------------------

@dataclass(frozen=True)
class TotalOrderSpec:
    """A total order on partitions: ``lex``, ``lexprime`` or ``custom``.

    ``lexprime`` is ``lam <=' mu  iff  lam' >= mu'`` lexicographically.
    ``custom`` lists its items in ascending order.
    """

    kind: str = "lex"
    items: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "lexprime", "custom"):
            raise BasicSetError(f"unknown order kind {self.kind!r}")
        items = tuple(self.items)
        object.__setattr__(self, "items", items)
        if self.kind == "custom":
            if len(set(items)) != len(items):
                raise BasicSetError("custom order lists an item twice")
            object.__setattr__(self, "_rank", {x: i for i, x in enumerate(items)})

    def key(self, lam):
        if self.kind == "lex":
            return tuple(lam)
        if self.kind == "lexprime":
            return tuple(-x for x in conjugate(lam))
        try:
            return self._rank[lam]
        except KeyError as exc:
            raise BasicSetError(f"{lam} is not in the custom order") from exc

    def leq(self, a, b) -> bool:
        return self.key(a) <= self.key(b)

    def lt(self, a, b) -> bool:
        return self.key(a) < self.key(b)

    def max(self, a, b):
        return b if self.leq(a, b) else a

    def sorted(self, items: Iterable) -> list:
        return sorted(items, key=self.key)

    def __str__(self) -> str:
        return self.kind


LEX = TotalOrderSpec("lex")
LEXPRIME = TotalOrderSpec("lexprime")


def order_spec(name: str | TotalOrderSpec) -> TotalOrderSpec:
    if isinstance(name, TotalOrderSpec):
        return name
    return TotalOrderSpec(name)


# -- basic-set data --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BasicSetDatum:
    """``(B, order, psi)``: ``order`` lists every row label, ascending."""

    B: tuple
    order: tuple
    psi: Mapping
    p: int | None = None
    n: int | None = None
    meta: Mapping = field(default_factory=dict)

    def __post_init__(self):
        order = tuple(self.order)
        if len(set(order)) != len(order):
            raise BasicSetError("order lists a label twice")
        rank = {x: i for i, x in enumerate(order)}
        missing = [b for b in self.B if b not in rank]
        if missing:
            raise BasicSetError(f"basic set elements outside the order: {missing}")
        B = tuple(sorted(set(self.B), key=rank.__getitem__))
        psi = dict(self.psi)
        if set(psi) != set(B):
            raise BasicSetError("psi must be defined exactly on B")
        if len(set(psi.values())) != len(psi):
            raise BasicSetError("psi is not injective")
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "psi", MappingProxyType(psi))
        object.__setattr__(self, "meta", MappingProxyType(dict(self.meta)))
        object.__setattr__(self, "_rank", rank)
        object.__setattr__(self, "_inv", {v: k for k, v in psi.items()})

    def __eq__(self, other):
        if not isinstance(other, BasicSetDatum):
            return NotImplemented
        return (self.B, self.order, dict(self.psi)) == (other.B, other.order, dict(other.psi))

    __hash__ = None

    def __len__(self) -> int:
        return len(self.B)

    def __contains__(self, x) -> bool:
        return x in self.psi

    def rank(self, x) -> int:
        try:
            return self._rank[x]
        except KeyError as exc:
            raise BasicSetError(f"{x} is not in the order") from exc

    def leq(self, a, b) -> bool:
        return self.rank(a) <= self.rank(b)

    def lt(self, a, b) -> bool:
        return self.rank(a) < self.rank(b)

    def psi_inverse(self, col):
        return self._inv[col]

    def restricted(self, rows: Iterable) -> "BasicSetDatum":
        """Same data on a subset of the row labels."""
        keep = set(rows)
        B = [b for b in self.B if b in keep]
        return BasicSetDatum(B, [x for x in self.order if x in keep],
                             {b: self.psi[b] for b in B}, self.p, self.n, self.meta)

    def to_json(self) -> dict:
        out = {
            "p": self.p,
            "n": self.n,
            "B": [_encode_label(b) for b in self.B],
            "order": [_encode_label(x) for x in self.order],
            "psi": [[_encode_label(b), _encode_label(self.psi[b])] for b in self.B],
        }
        if self.meta:
            out["meta"] = dict(self.meta)
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "BasicSetDatum":
        return cls(
            tuple(_decode_label(b) for b in data["B"]),
            tuple(_decode_label(x) for x in data["order"]),
            {_decode_label(b): _decode_label(c) for b, c in data["psi"]},
            data.get("p"),
            data.get("n"),
            data.get("meta", {}),
        )


# -- verification ----------------------------------------------------------------

def verify_basic_set(D: DecompMatrixModel, B: Iterable) -> bool:
    """True iff the rows ``B`` of ``D`` form a square matrix of determinant +-1."""
    B = list(B)
    if len(B) != len(D.cols):
        raise BasicSetError(f"|B| = {len(B)} but there are {len(D.cols)} columns")
    sub = []
    for b in B:
        if not D.has_row(b):
            raise BasicSetError(f"{b} is not a row of the matrix")
        row = D.row(b)
        for c, e in zip(D.cols, row):
            if e is None:
                raise UnknownEntryError(b, c)
        sub.append(row)
    return abs(_determinant(sub)) == 1


def unitriangularity_violations(D: DecompMatrixModel, datum: BasicSetDatum,
                                allow_unknown: bool = False) -> list[dict]:
    """Every failure of the two unitriangularity conditions, as dicts.

    Unknown entries raise :class:`UnknownEntryError` unless ``allow_unknown``,
    in which case they are skipped.
    """
    out: list[dict] = []
    cols = set(D.cols)
    image = set(datum.psi.values())
    for c in D.cols:
        if c not in image:
            out.append({"kind": "psi", "col": c, "detail": "column not in the image of psi"})
    for b in datum.B:
        if datum.psi[b] not in cols:
            out.append({"kind": "psi", "row": b, "col": datum.psi[b],
                        "detail": "psi value is not a column"})
    for b in datum.B:
        c = datum.psi[b]
        if c not in cols or not D.has_row(b):
            continue
        e = D.entry(b, c)
        if e is None:
            if not allow_unknown:
                raise UnknownEntryError(b, c)
            out.append({"kind": "diagonal", "row": b, "col": c, "entry": None})
        elif e != 1:
            out.append({"kind": "diagonal", "row": b, "col": c, "entry": e})
    for r, vals in zip(D.rows, D.entries):
        for c, e in zip(D.cols, vals):
            if c not in image:
                continue
            if e is None:
                if not allow_unknown:
                    raise UnknownEntryError(r, c)
                continue
            if e and not datum.leq(r, datum.psi_inverse(c)):
                out.append({"kind": "order", "row": r, "col": c, "entry": e,
                            "psi_inverse": datum.psi_inverse(c)})
    return out


def verify_unitriangular_basic_set(D: DecompMatrixModel, datum: BasicSetDatum,
                                   allow_unknown: bool = False) -> bool:
    if len(datum.B) != len(D.cols):
        return False
    return not unitriangularity_violations(D, datum, allow_unknown)


# -- the twisted order and theta -----------------------------------------------------

def prec_key(lam: Sequence[int], base: TotalOrderSpec = LEX):
    """Sort key realizing ``prec``."""
    lam = as_partition(lam)
    return (base.key(base.max(lam, conjugate(lam))), base.key(lam))


def prec(lam: Sequence[int], mu: Sequence[int], base: TotalOrderSpec = LEX,
         literal: bool = False) -> bool:
    """``lam prec mu`` by the three clauses.

    Inside a conjugate pair the base-larger member is the larger one
    (``lam = mu'`` and ``mu' <= mu``).  ``literal=True`` evaluates the guard
    the other way round, ``mu <= mu'``, for comparison only.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.n != mu.n:
        raise PartitionError(f"size mismatch: |{lam}| != |{mu}|")
    if lam == mu:
        return True
    mu_c = conjugate(mu)
    if lam == mu_c:
        return base.leq(mu, mu_c) if literal else base.leq(mu_c, mu)
    return base.lt(base.max(lam, conjugate(lam)), base.max(mu, mu_c))


def _m(lam: Partition, p: int) -> Partition:
    return lam if p == 2 else mullineux(lam, p)


def theta(lam: Sequence[int], p: int, base: TotalOrderSpec = LEX) -> Partition:
    """``lam`` if ``m(lam) <= lam``, else ``m(lam)'``."""
    lam = as_partition(lam)
    m = _m(lam, p)
    return lam if base.leq(m, lam) else conjugate(m)


def in_tilde_basic_set(lam: Sequence[int], p: int, base: TotalOrderSpec = LEX) -> bool:
    lam = as_partition(lam)
    if is_p_regular(lam, p) and base.leq(_m(lam, p), lam):
        return True
    conj = conjugate(lam)
    return is_p_regular(conj, p) and base.lt(_m(conj, p), conj)


def tilde_mullineux(lam: Sequence[int], p: int, base: TotalOrderSpec = LEX) -> Partition:
    """The involution induced on ``B~``: fixed on Mullineux-fixed labels,
    conjugation otherwise."""
    lam = as_partition(lam)
    if not in_tilde_basic_set(lam, p, base):
        raise BasicSetError(f"{lam} is not in the twisted basic set")
    if is_p_regular(lam, p) and _m(lam, p) == lam:
        return lam
    return conjugate(lam)


def build_tilde_basic_set(n: int, p: int, base: TotalOrderSpec | str = LEX,
                          core: Sequence[int] | None = None) -> BasicSetDatum:
    """``(B~, prec, psi~)``; ``psi~`` sends ``theta(lam)`` to the column ``lam``.

    With ``core`` given, only that block is built (rows and order included).
    """
    base = order_spec(base)
    if core is not None:
        core = as_partition(core)
        if not is_p_core(core, p):
            raise BasicSetError(f"{core} is not a {p}-core")

    def in_block(lam):
        return core is None or p_core(lam, p) == core

    regular = [lam for lam in p_regular_partitions_of(n, p) if in_block(lam)]
    psi = {}
    for lam in regular:
        x = theta(lam, p, base)
        if x in psi:  # pragma: no cover - theta is injective
            raise AssertionError(f"theta is not injective at {lam}, {psi[x]}")
        psi[x] = lam
    lower = {lam for lam in regular if base.lt(_m(lam, p), lam)}
    fixed = {lam for lam in regular if _m(lam, p) == lam}
    parts = [lower, {conjugate(lam) for lam in lower}, fixed]
    union = set().union(*parts)
    if sum(map(len, parts)) != len(union) or union != set(psi):  # pragma: no cover
        raise AssertionError("B~ is not the disjoint union of its three parts")
    order = sorted((lam for lam in partitions_of(n) if in_block(lam)),
                   key=lambda lam: prec_key(lam, base))
    meta = {"base": base.kind, "core": None if core is None else list(core),
            "fixed": [list(lam) for lam in sorted(fixed, reverse=True)]}
    return BasicSetDatum(tuple(psi), tuple(order), psi, p, n, meta)


def restrict_to_block(datum_or_set, core: Sequence[int], p: int | None = None):
    """``(B~1, B~2)`` for the block with p-core ``core``.

    ``B~2`` holds the members whose column label is Mullineux-fixed.  A
    :class:`BasicSetDatum` filters on its column labels; a bare set of
    partitions (with ``p``) filters on the partitions themselves.
    """
    core = as_partition(core)
    if isinstance(datum_or_set, BasicSetDatum):
        p = datum_or_set.p if p is None else p
        members = [(x, datum_or_set.psi[x]) for x in datum_or_set.B]
        order = datum_or_set.rank
    else:
        if p is None:
            raise BasicSetError("p is required when restricting a bare set")
        members = [(as_partition(x), as_partition(x)) for x in datum_or_set]
        order = None
    if not is_p_core(core, p):
        raise BasicSetError(f"{core} is not a {p}-core")
    b1, b2 = [], []
    for x, col in members:
        if p_core(col, p) != core:
            continue
        fixed = is_p_regular(col, p) and _m(col, p) == col
        (b2 if fixed else b1).append(x)
    if order is not None:
        b1.sort(key=order)
        b2.sort(key=order)
    return tuple(b1), tuple(b2)


def block_datum(datum: BasicSetDatum, core: Sequence[int]) -> BasicSetDatum:
    """The datum cut down to one block (rows and basic set)."""
    core = as_partition(core)
    return datum.restricted(x for x in datum.order if p_core(x, datum.p) == core)


# -- the rho swap ----------------------------------------------------------------

class RhoSwapError(BasicSetError):
    def __init__(self, violations: list[dict]):
        super().__init__(f"rho swap rejected: {violations}")
        self.violations = violations


def in_G(lam: Sequence[int], p: int) -> bool:
    """Self-conjugate with no diagonal hook divisible by ``p``."""
    lam = as_partition(lam)
    return conjugate(lam) == lam and all(h % p for h in diagonal_hooks(lam))


def rho_swap(b1: Iterable, b2: Iterable, rho: Mapping, D: DecompMatrixModel,
             datum: BasicSetDatum) -> BasicSetDatum:
    """Replace each Mullineux-fixed ``mu`` in ``B~2`` by ``rho(mu)``.

    Checks, for every ``mu``: ``d[rho(mu), psi~(mu)] == 1`` and
    ``d[rho(mu), psi~(lam)] == 0`` for every ``lam`` in ``B~`` strictly
    between ``rho(mu)`` and ``mu``.  In the returned order ``rho(mu)`` sits
    just above ``mu``, and ``psi~'(rho(mu)) = psi~(mu)``.
    """
    b1, b2 = tuple(b1), tuple(b2)
    rho = {as_partition(k): as_partition(v) for k, v in rho.items()}
    p = datum.p
    if set(rho) != set(b2):
        raise BasicSetError("rho must be defined exactly on B~2")
    if len(set(rho.values())) != len(rho):
        raise BasicSetError("rho is not injective")
    violations: list[dict] = []
    for mu, nu in rho.items():
        if not in_G(nu, p):
            violations.append({"mu": mu, "lambda": nu, "entry": None,
                               "condition": "rho(mu) must be self-conjugate with no diagonal hook divisible by p"})
        if nu in b1:
            violations.append({"mu": mu, "lambda": nu, "entry": None,
                               "condition": "rho(mu) already lies in B~1"})
    if violations:
        raise RhoSwapError(violations)
    for mu in b2:
        nu = rho[mu]
        if not datum.lt(nu, mu):
            violations.append({"mu": mu, "lambda": nu, "entry": None,
                               "condition": "rho(mu) must precede mu"})
            continue
        e = D.entry(nu, datum.psi[mu])
        if e != 1:
            violations.append({"mu": mu, "lambda": mu, "entry": e,
                               "condition": "d[rho(mu), psi(mu)] == 1"})
        for lam in datum.B:
            if datum.lt(nu, lam) and datum.lt(lam, mu):
                e = D.entry(nu, datum.psi[lam])
                if e != 0:
                    violations.append({"mu": mu, "lambda": lam, "entry": e,
                                       "condition": "d[rho(mu), psi(lam)] == 0 between rho(mu) and mu"})
    if violations:
        raise RhoSwapError(violations)

    order = list(datum.order)
    for mu in b2:
        order.remove(rho[mu])
        order.insert(order.index(mu) + 1, rho[mu])
    psi = {x: datum.psi[x] for x in b1}
    psi.update({rho[mu]: datum.psi[mu] for mu in b2})
    keep = set(datum.order)
    meta = dict(datum.meta)
    meta["rho"] = [[list(mu), list(rho[mu])] for mu in b2]
    out = BasicSetDatum(tuple(psi), tuple(x for x in order if x in keep), psi, p, datum.n, meta)
    bad = [v for v in unitriangularity_violations(D, out, allow_unknown=True)
           if v["kind"] == "psi" or v.get("entry") is not None]
    if bad:
        raise RhoSwapError(bad)
    return out


def restriction_obstacles(datum: BasicSetDatum) -> list[str]:
    """Problems preventing restriction to the alternating group (empty if none).

    Needs ``B`` closed under conjugation, its self-conjugate members free of
    diagonal hooks divisible by p, and ``psi(lam') = m(psi(lam))``.
    """
    p = datum.p
    problems = []
    for x in datum.B:
        xc = conjugate(x)
        if xc not in datum.psi:
            problems.append(f"{x} is in B but {xc} is not")
            continue
        if xc == x and not in_G(x, p):
            problems.append(f"self-conjugate {x} has a diagonal hook divisible by {p}")
        if datum.psi[xc] != _m(datum.psi[x], p):
            problems.append(f"psi({xc}) != m(psi({x}))")
    return problems


# -- unitriangularisability -----------------------------------------------------------

@dataclass(frozen=True)
class Unitriangularisation:
    ok: bool
    row_order: tuple | None = None
    col_order: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def _square(M) -> list[list[int]]:
    M = [list(r) for r in M]
    if any(len(r) != len(M) for r in M):
        raise BasicSetError("matrix is not square")
    if any(e is None for r in M for e in r):
        raise BasicSetError("matrix has unknown entries")
    return M


def is_unitriangularisable(M) -> Unitriangularisation:
    """Can rows and columns be permuted into lower unitriangular form?

    Repeatedly take a row with exactly one nonzero entry among the columns
    still in play; it must be a 1, and that row/column pair goes next.  No
    backtracking is needed: such a row has to be matched with that column in
    any solution, and moving it to the front keeps a solution a solution.
    """
    M = _square(M)
    rows, cols = set(range(len(M))), set(range(len(M)))
    row_order, col_order = [], []
    while rows:
        for r in sorted(rows):
            nz = [c for c in cols if M[r][c]]
            if len(nz) == 1 and M[r][nz[0]] == 1:
                row_order.append(r)
                col_order.append(nz[0])
                rows.remove(r)
                cols.remove(nz[0])
                break
        else:
            return Unitriangularisation(False)
    return Unitriangularisation(True, tuple(row_order), tuple(col_order))


def has_enough_zeros(M) -> bool:
    """Necessary condition: a unitriangular n x n matrix has n(n-1)/2 zeros."""
    M = _square(M)
    n = len(M)
    return sum(1 for r in M for e in r if e == 0) >= n * (n - 1) // 2


def is_unitriangularisable_bruteforce(M) -> bool:
    M = _square(M)
    n = len(M)
    for rp in permutations(range(n)):
        for cp in permutations(range(n)):
            if all(M[rp[i]][cp[i]] == 1 for i in range(n)) and \
                    all(M[rp[i]][cp[j]] == 0 for i in range(n) for j in range(i + 1, n)):
                return True
    return False


# -- partial decomposition matrices ------------------------------------------------------

def partial_decomposition_matrix(n: int, p: int, core: Sequence[int], cache=None,
                                 word_for: Callable | None = None,
                                 fock: bool = True) -> DecompMatrixModel:
    """The block's decomposition matrix with every entry that can be pinned
    without a full computation; the rest are unknown.  ``fock=False`` skips
    the Fock columns.

    Sources, in order: Fock columns whose word satisfies the hypothesis;
    ``d[lam, lam^R] = 1`` (regularization); zeros forced by dominance; the
    twist ``d[lam, kappa] = d[lam', m(kappa)]``.
    """
    from .fock import HypothesisNotSatisfied, apply_word, check_hypothesis, ladder_word

    core = as_partition(core)
    if not is_p_core(core, p):
        raise BasicSetError(f"{core} is not a {p}-core")
    word_for = word_for or ladder_word
    rows = [lam for lam in partitions_of(n) if p_core(lam, p) == core]
    cols = [lam for lam in rows if is_p_regular(lam, p)]
    grid: dict[tuple, int | None] = {(r, c): None for r in rows for c in cols}
    sources = {"fock": [], "regularization": 0, "dominance": 0, "twist": 0}

    for c in (cols if fock else ()):
        x = apply_word(word_for(c, p), cache=cache)
        try:
            check_hypothesis(x, c)
        except HypothesisNotSatisfied:
            continue
        sources["fock"].append(list(c))
        for r in rows:
            grid[r, c] = x[r].at_one()
    for r in rows:
        c = regularize(r, p)
        if grid[r, c] is None:
            grid[r, c] = 1
            sources["regularization"] += 1
    for c in cols:
        for r in rows:
            if grid[r, c] is None and not dominance_leq(r, c):
                grid[r, c] = 0
                sources["dominance"] += 1
    changed = True
    while changed:
        changed = False
        for c in cols:
            mc = _m(c, p)
            for r in rows:
                if grid[r, c] is None:
                    twin = grid[conjugate(r), mc]
                    if twin is not None:
                        grid[r, c] = twin
                        sources["twist"] += 1
                        changed = True
    entries = [[grid[r, c] for c in cols] for r in rows]
    meta = {"provenance": "[DERIVED] Fock columns, regularization, dominance and twist; "
                          "null where none of these decides the entry",
            "sources": sources}
    return DecompMatrixModel(tuple(rows), tuple(cols), entries, p, n, core, meta)
