"""Clifford theory for the pair (S_n, A_n) at the level of decomposition matrices.

Ordinary characters of A_n are ``rho_lam`` (one per pair ``{lam, lam'}``) and
``rho_lam^+-`` for ``lam = lam'``.  Brauer characters are ``phi_mu`` (one per
pair ``{mu, m(mu)}``) and ``phi_mu^+-`` for Mullineux-fixed ``mu``.  Both are
:class:`AnLabel` values whose ``base`` is the lex-larger member of the pair.

Restriction and induction of basic sets work entry by entry: every entry of
the output matrix is either a sum of input entries or unknown.  All orders
follow the basic-set convention (``d[x, M] != 0`` forces
``x <= psi^-1(M)``) and are stored ascending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Mapping, Sequence

from .basicsets import (
    LEX,
    BasicSetDatum,
    BasicSetError,
    DecompMatrixModel,
    TotalOrderSpec,
    block_datum,
    build_tilde_basic_set,
    in_G,
    order_spec,
    partial_decomposition_matrix,
    restrict_to_block,
)
from .mullineux import mullineux
from .partitions import (
    Partition,
    as_partition,
    conjugate,
    diagonal_hooks,
    is_p_core,
    is_p_regular,
    p_core,
    p_quotient,
    parse_partition,
    partitions_of,
)


class CliffordError(BasicSetError):
    def __init__(self, message: str, label=None):
        super().__init__(message if label is None else f"{message}: {label}")
        self.label = label


def _require_odd(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise CliffordError("p must be an odd prime")


# -- labels ------------------------------------------------------------------------

@dataclass(frozen=True)
class AnLabel:
    """``rho``/``phi`` labels of A_n: ``kind`` is ``"row"`` or ``"col"``,
    ``sign`` is ``None``, ``"+"`` or ``"-"``."""

    kind: str
    base: Partition
    sign: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "base", as_partition(self.base))
        if self.kind not in ("row", "col"):
            raise CliffordError(f"kind must be 'row' or 'col', not {self.kind!r}")
        if self.sign not in (None, "+", "-"):
            raise CliffordError(f"bad sign {self.sign!r}")
        if self.kind == "row":
            conj = conjugate(self.base)
            if self.sign is not None and conj != self.base:
                raise CliffordError("only self-conjugate rows split", self.base)
            if self.sign is None and conj == self.base:
                raise CliffordError("self-conjugate rows carry a sign", self.base)
            if self.sign is None and conj > self.base:
                raise CliffordError("row base must be the lex-larger of lam, lam'", self.base)

    @classmethod
    def row(cls, lam: Sequence[int], sign: str | None = None) -> "AnLabel":
        lam = as_partition(lam)
        return cls("row", max(lam, conjugate(lam)), sign)

    @classmethod
    def col(cls, mu: Sequence[int], p: int, sign: str | None = None) -> "AnLabel":
        mu = as_partition(mu)
        m = mullineux(mu, p)
        if (sign is None) != (m != mu):
            raise CliffordError("columns split exactly when Mullineux-fixed", mu)
        return cls("col", max(mu, m), sign)

    @property
    def split(self) -> bool:
        return self.sign is not None

    def partner(self) -> "AnLabel":
        """The sigma-conjugate label (itself when not split)."""
        if self.sign is None:
            return self
        return AnLabel(self.kind, self.base, "-" if self.sign == "+" else "+")

    def to_json(self) -> dict:
        return {"kind": self.kind, "base": list(self.base), "sign": self.sign}

    @classmethod
    def from_json(cls, data: Mapping) -> "AnLabel":
        return cls(data["kind"], Partition(data["base"]), data.get("sign"))

    def __str__(self) -> str:
        return ("psi" if self.kind == "row" else "phi") + str(self.base) + (self.sign or "")

    @classmethod
    def parse(cls, text: str, kind: str | None = None) -> "AnLabel":
        """Parse ``"psi(3,2,1)+"`` or ``"phi(6)"``; a bare ``"(3,2,1)+"`` needs ``kind``."""
        text = text.strip()
        if text.startswith("psi"):
            kind, text = "row", text[3:]
        elif text.startswith("phi"):
            kind, text = "col", text[3:]
        if kind is None:
            raise CliffordError(f"cannot tell row from column in {text!r}")
        sign = None
        if text and text[-1] in "+-":
            sign, text = text[-1], text[:-1]
        return cls(kind, parse_partition(text), sign)


@dataclass(frozen=True)
class SplitClassValue:
    """``x + y_sign * y`` with ``y = sqrt(+-radicand) / 2``; ``imaginary``
    marks a negative quantity under the root."""

    x: Fraction
    y_sign: int
    y_radicand: int
    imaginary: bool

    def __str__(self) -> str:
        root = f"sqrt({'-' if self.imaginary else ''}{self.y_radicand})"
        return f"{self.x} {'+' if self.y_sign > 0 else '-'} {root}/2"


# -- blocks ------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDescriptor:
    n: int
    p: int
    core: Partition
    weight: int
    self_conjugate_core: bool
    members: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "core", as_partition(self.core))
        if not is_p_core(self.core, self.p):
            raise CliffordError(f"{self.core} is not a {self.p}-core")
        if self.core.n + self.p * self.weight != self.n:
            raise CliffordError("weight must equal (n - |core|) / p")

    def regular_members(self) -> tuple:
        return tuple(lam for lam in self.members if is_p_regular(lam, self.p))

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "core": list(self.core), "weight": self.weight,
                "self_conjugate_core": self.self_conjugate_core,
                "members": [list(lam) for lam in self.members]}


def block_descriptor(n: int, p: int, core: Sequence[int]) -> BlockDescriptor:
    core = as_partition(core)
    if (n - core.n) % p or n < core.n:
        raise CliffordError(f"no block of {n} has {p}-core {core}")
    members = tuple(lam for lam in partitions_of(n) if p_core(lam, p) == core)
    return BlockDescriptor(n, p, core, (n - core.n) // p, conjugate(core) == core, members)


def block_of(lam: Sequence[int], p: int) -> BlockDescriptor:
    lam = as_partition(lam)
    return block_descriptor(lam.n, p, p_core(lam, p))


def blocks(n: int, p: int) -> list[BlockDescriptor]:
    """The p-blocks of S_n, grouped by p-core, members lex-descending."""
    groups: dict[Partition, list[Partition]] = {}
    for lam in partitions_of(n):
        groups.setdefault(p_core(lam, p), []).append(lam)
    return [BlockDescriptor(n, p, core, (n - core.n) // p, conjugate(core) == core, tuple(ms))
            for core, ms in groups.items()]


def epsilon_on_block(b: BlockDescriptor) -> BlockDescriptor:
    """Tensoring with the sign: the block with the conjugate core."""
    core = conjugate(b.core)
    members = tuple(sorted((conjugate(lam) for lam in b.members), reverse=True))
    return BlockDescriptor(b.n, b.p, core, b.weight, b.self_conjugate_core, members)


# -- the sets T, G_gamma, C_gamma ------------------------------------------------------

def in_T(lam: Sequence[int], p: int) -> bool:
    """Self-conjugate with every diagonal hook prime to p."""
    _require_odd(p)
    return in_G(lam, p)


def in_T_via_quotient(lam: Sequence[int], p: int) -> bool:
    """Self-conjugate with empty middle p-quotient component (runner (p-1)/2)."""
    _require_odd(p)
    lam = as_partition(lam)
    return conjugate(lam) == lam and not p_quotient(lam, p)[(p - 1) // 2]


def _self_conjugate_in_block(gamma: Partition, n: int, p: int):
    for lam in partitions_of(n):
        if conjugate(lam) == lam and p_core(lam, p) == gamma:
            yield lam


def G_gamma(gamma: Sequence[int], n: int, p: int) -> list[Partition]:
    """Self-conjugate partitions of n with p-core gamma and diagonal hooks prime to p."""
    gamma = as_partition(gamma)
    return [lam for lam in _self_conjugate_in_block(gamma, n, p) if in_T(lam, p)]


def C_gamma(gamma: Sequence[int], n: int, p: int) -> list[Partition]:
    """The same set, read off the p-quotient."""
    gamma = as_partition(gamma)
    return [lam for lam in _self_conjugate_in_block(gamma, n, p) if in_T_via_quotient(lam, p)]


def split_class_values(lam: Sequence[int]) -> dict[tuple[str, str], SplitClassValue]:
    """Values of ``rho_lam^s`` on the split class ``t``: key ``(s, t)``.

    ``rho^+-(t_+) = x +- y`` and ``rho^+-(t_-) = x -+ y`` with
    ``x = (-1)^((n-k)/2) / 2``, ``y = sqrt((-1)^((n-k)/2) d_1...d_k) / 2``.
    """
    lam = as_partition(lam)
    if conjugate(lam) != lam:
        raise CliffordError("split class values need a self-conjugate partition", lam)
    hooks = diagonal_hooks(lam)
    sign = -1 if ((lam.n - len(hooks)) // 2) % 2 else 1
    x = Fraction(sign, 2)
    radicand = prod(hooks)
    out = {}
    for s in "+-":
        for t in "+-":
            out[s, t] = SplitClassValue(x, 1 if s == t else -1, radicand, sign < 0)
    return out


# -- shapes and counts --------------------------------------------------------------

@dataclass(frozen=True)
class AnBlockShape:
    rows: tuple
    cols: tuple

    def to_json(self) -> dict:
        return {"rows": [str(r) for r in self.rows], "cols": [str(c) for c in self.cols]}


def _row_labels(members: Iterable[Partition]) -> list[AnLabel]:
    out = []
    seen = set()
    for lam in members:
        if lam in seen:
            continue
        conj = conjugate(lam)
        seen.update((lam, conj))
        if conj == lam:
            out += [AnLabel.row(lam, "+"), AnLabel.row(lam, "-")]
        else:
            out.append(AnLabel.row(lam))
    return out


def _col_labels(regular: Iterable[Partition], p: int) -> list[AnLabel]:
    out = []
    seen = set()
    for mu in regular:
        if mu in seen:
            continue
        m = mullineux(mu, p)
        seen.update((mu, m))
        if m == mu:
            out += [AnLabel.col(mu, p, "+"), AnLabel.col(mu, p, "-")]
        else:
            out.append(AnLabel.col(mu, p))
    return out


def an_shape(b: BlockDescriptor) -> list[AnBlockShape]:
    """Row and column labels of the A_n block(s) under ``b``."""
    _require_odd(b.p)
    p = b.p
    if not b.self_conjugate_core:
        members = b.members + epsilon_on_block(b).members
        regular = [mu for mu in members if is_p_regular(mu, p)]
        return [AnBlockShape(tuple(_row_labels(sorted(members, reverse=True))),
                             tuple(_col_labels(sorted(regular, reverse=True), p)))]
    if b.weight == 0:
        (lam,) = b.members
        return [AnBlockShape((AnLabel.row(lam, s),), (AnLabel.col(lam, p, s),)) for s in "+-"]
    return [AnBlockShape(tuple(_row_labels(b.members)), tuple(_col_labels(b.regular_members(), p)))]


def count_IBr_An(B: Iterable[Sequence[int]], f: int | None = None) -> int:
    """``(|B| - f)/2 + 2f`` for an epsilon-stable set ``B`` with ``f`` fixed rows."""
    B = {as_partition(x) for x in B}
    if any(conjugate(x) not in B for x in B):
        raise CliffordError("B is not closed under conjugation")
    fixed = sum(1 for x in B if conjugate(x) == x)
    if f is None:
        f = fixed
    elif f != fixed:
        raise CliffordError(f"B has {fixed} self-conjugate rows, not {f}")
    return (len(B) - f) // 2 + 2 * f


# -- restriction -----------------------------------------------------------------

def _add(*xs):
    return None if any(x is None for x in xs) else sum(xs)


def restriction_problems(D: DecompMatrixModel, datum: BasicSetDatum) -> list[tuple[str, object]]:
    p = datum.p
    out = []
    for x in datum.B:
        xc = conjugate(x)
        if xc not in datum.psi:
            out.append(("B is not closed under conjugation", x))
            continue
        if datum.psi[xc] != mullineux(datum.psi[x], p):
            out.append(("psi is not equivariant: psi(lam') != m(psi(lam))", x))
        if xc == x and not in_G(x, p):
            out.append(("self-conjugate row of B outside T", x))
        if not D.has_row(x):
            out.append(("row missing from the matrix", x))
    cols = set(D.cols)
    if set(datum.psi.values()) != cols:
        out.append(("psi is not a bijection onto the columns", None))
    return out


def restrict_basic_set_to_An(D: DecompMatrixModel, datum: BasicSetDatum):
    """Restrict an epsilon-stable, equivariant unitriangular basic set of a
    block of S_n to A_n.  Returns ``(matrix, datum)`` for the A_n block.

    For each pair ``{lam, lam'}`` in B the smaller one is kept; columns are
    the restrictions of ``psi`` of the kept rows.  Entries:

    * pair row, pair column: ``d[lam, M] + d[lam', M]``
    * pair row, split column ``M^+-``: ``d[lam, M]`` each
    * split row, pair column: ``d[lam, M]``
    * split row, split column: identity on the diagonal (``psi^+`` is the
      constituent with ``d[psi^+, phi^+] = 1``); off the diagonal 0 if
      ``d[lam, M] = 0``, otherwise unknown.
    """
    _require_odd(datum.p)
    problems = restriction_problems(D, datum)
    if problems:
        msg, label = problems[0]
        raise CliffordError(msg, label)
    p = datum.p
    A = [x for x in datum.B if not datum.lt(conjugate(x), x)]

    def e(r, c):
        return D.entry(r, c)

    rows: list[AnLabel] = []
    cols: list[AnLabel] = []
    src_row: dict[AnLabel, Partition] = {}
    src_col: dict[AnLabel, Partition] = {}
    order: list[AnLabel] = []
    psi: dict[AnLabel, AnLabel] = {}
    for x in A:
        M = datum.psi[x]
        if conjugate(x) == x:
            pair = [(AnLabel.row(x, s), AnLabel.col(M, p, s)) for s in "-+"]
        else:
            pair = [(AnLabel.row(x), AnLabel.col(M, p))]
        for r, c in pair:
            rows.append(r)
            cols.append(c)
            src_row[r], src_col[c] = x, M
            order.append(r)
            psi[r] = c

    entries = []
    for r in rows:
        x = src_row[r]
        line = []
        for c in cols:
            M = src_col[c]
            if not r.split and not c.split:
                val = _add(e(x, M), e(conjugate(x), M))
            elif not r.split:
                total = _add(e(x, M), e(conjugate(x), M))
                if total is not None and total % 2:
                    raise CliffordError("odd total on a split column for a sigma-stable row", x)
                val = None if total is None else total // 2
            elif not c.split:
                val = e(x, M)
            elif M == datum.psi[x]:
                val = 1 if r.sign == c.sign else 0
            else:
                d = e(x, M)
                val = 0 if d == 0 else None
            line.append(val)
        entries.append(line)

    meta = {
        "provenance": "restriction of an epsilon-stable basic set of S_n",
        "kept_rows": [list(x) for x in A],
        "sign_convention": "d[psi^+, phi^+] = 1 and d[psi^+, phi^-] = 0; psi^- precedes psi^+",
    }
    D_An = DecompMatrixModel(tuple(rows), tuple(cols), entries, p, D.n, D.core, meta,
                             check_rank=False)
    datum_An = BasicSetDatum(tuple(rows), tuple(order), psi, p, D.n, {"source": "restriction"})
    return D_An, datum_An


# -- induction -------------------------------------------------------------------

def _pair_members(label: AnLabel, p: int):
    """(plus, minus) S_n labels over an A_n label; plus is the lex-larger."""
    if label.kind == "row":
        return label.base, conjugate(label.base)
    return label.base, mullineux(label.base, p)


def induce_basic_set_to_Sn(D: DecompMatrixModel, datum: BasicSetDatum):
    """Induce a unitriangular basic set of an A_n block to S_n.

    ``E(phi)`` is the larger of ``psi^-1(phi)``, ``psi^-1(sigma phi)`` for
    split ``phi``; the rows kept are ``E_b`` (B minus the smaller ones).
    A sigma-stable row ``rho_lam`` gives ``chi^+ = lam``, ``chi^- = lam'``
    (``lam`` lex-larger); a split row gives ``chi_lam``.  A sigma-stable
    column ``phi_mu`` gives ``D^mu`` (``+``) and ``D^m(mu)`` (``-``); a split
    column gives ``D^mu``.  Entries:

    * ``chi_lam`` vs ``D^mu``, ``D^m(mu)``: ``d[psi, phi]`` each
    * ``chi_lam`` vs split-column image: ``d[psi, phi] + d[psi, sigma phi]``
    * ``chi^+-`` vs split-column image: half of that sum each
    * ``chi_i^+-`` vs ``D_j^+-``: identity when ``i = j``; otherwise 0 when
      ``d[psi_i, phi_j] = 0`` and unknown when not, subject to the recorded
      constraint ``[[a, b], [b, a]]`` with ``a + b = d[psi_i, phi_j]``.
    """
    p = datum.p
    _require_odd(p)
    if not all(isinstance(x, AnLabel) for x in datum.B):
        raise CliffordError("induction expects A_n labels")
    split_cols = [c for c in D.cols if c.split]
    starred = set()
    for c in split_cols:
        a, b = datum.psi_inverse(c), datum.psi_inverse(c.partner())
        starred.add(a if datum.lt(a, b) else b)
    E_b = [x for x in datum.B if x not in starred]

    rows: list[Partition] = []
    order: list[Partition] = []
    psi: dict[Partition, Partition] = {}
    row_src: dict[Partition, tuple[AnLabel, str | None]] = {}
    col_src: dict[Partition, tuple[AnLabel, str | None]] = {}
    cols: list[Partition] = []
    for x in E_b:
        c = datum.psi[x]
        if x.split:
            if not c.split:
                raise CliffordError("a split row must map to a split column", x)
            chi, col = x.base, c.base
            rows.append(chi)
            cols.append(col)
            order.append(chi)
            psi[chi] = col
            row_src[chi] = (x, None)
            col_src[col] = (c, None)
        else:
            if c.split:
                raise CliffordError("a sigma-stable row must map to a sigma-stable column", x)
            (lp, lm), (mp, mm) = _pair_members(x, p), _pair_members(c, p)
            for lam, mu, s in ((lm, mm, "-"), (lp, mp, "+")):
                rows.append(lam)
                cols.append(mu)
                order.append(lam)
                psi[lam] = mu
                row_src[lam] = (x, s)
                col_src[mu] = (c, s)

    def d(r: AnLabel, c: AnLabel):
        return D.entry(r, c)

    constraints = []
    entries = []
    for lam in rows:
        r, rs = row_src[lam]
        line = []
        for mu in cols:
            c, cs = col_src[mu]
            if rs is None and cs is not None:
                val = d(r, c)
            elif cs is None:
                total = _add(d(r, c), d(r, c.partner()))
                if rs is None:
                    val = total
                else:
                    if total is not None and total % 2:
                        raise CliffordError("odd total against an epsilon-stable column", lam)
                    val = None if total is None else total // 2
            elif c == datum.psi[r]:
                val = 1 if rs == cs else 0
            else:
                val = d(r, c)
                if val is not None and val != 0:
                    val = None
            line.append(val)
        entries.append(line)
    for x in E_b:
        if x.split:
            continue
        for y in E_b:
            c = datum.psi[y]
            if y == x or y.split:
                continue
            total = d(x, c)
            if total:
                (lp, lm), (mp, mm) = _pair_members(x, p), _pair_members(c, p)
                constraints.append({"rows": [list(lp), list(lm)], "cols": [list(mp), list(mm)],
                                    "form": "[[a, b], [b, a]]", "a+b": total})
    n = D.n
    meta = {
        "provenance": "induction of a unitriangular basic set of A_n",
        "E_b": [str(x) for x in E_b],
        "sign_convention": "chi^+ and phi~^+ are the lex-larger members of their pairs; "
                           "d[chi^+, phi~^+] = 1 is the labeling choice",
        "constraints": constraints,
    }
    core = D.core
    D_Sn = DecompMatrixModel(tuple(rows), tuple(cols), entries, p, n, core, meta, check_rank=False)
    datum_Sn = BasicSetDatum(tuple(rows), tuple(order), psi, p, n, {"source": "induction"})
    return D_Sn, datum_Sn


# -- label checks --------------------------------------------------------------------

def validate_An_basic_set_labels(b: Iterable[AnLabel], gamma: Sequence[int], n: int, p: int) -> dict:
    """Split rows must be labeled by ``C_gamma``, and every member of
    ``C_gamma`` must label at least one split row."""
    _require_odd(p)
    gamma = as_partition(gamma)
    if conjugate(gamma) != gamma:
        raise CliffordError("gamma must be self-conjugate", gamma)
    if n == gamma.n:
        raise CliffordError("the block must have positive weight")
    allowed = set(C_gamma(gamma, n, p))
    split = [x for x in b if x.kind == "row" and x.split]
    violations = []
    for x in split:
        if x.base not in allowed:
            violations.append({"label": str(x), "problem": "split row outside C_gamma"})
    bases = {x.base for x in split}
    for lam in sorted(allowed, reverse=True):
        if lam not in bases:
            violations.append({"label": str(lam), "problem": "member of C_gamma labels no split row"})
    return {"ok": not violations, "violations": violations,
            "C_gamma": [list(lam) for lam in sorted(allowed, reverse=True)]}


# -- odd weight ----------------------------------------------------------------------

def odd_weight_basic_set(n: int, p: int, core: Sequence[int], base: TotalOrderSpec | str = LEX):
    """Unitriangular basic set of the A_n block over an odd-weight,
    self-conjugate-core block of S_n.  Returns ``(matrix, datum)``; the
    matrix is a skeleton (known entries from regularization, dominance and
    the twist; the rest unknown)."""
    _require_odd(p)
    base = order_spec(base)
    core = as_partition(core)
    if not is_p_core(core, p):
        raise CliffordError(f"{core} is not a {p}-core")
    if conjugate(core) != core:
        raise CliffordError("the core must be self-conjugate", core)
    if (n - core.n) % p:
        raise CliffordError(f"no block of {n} has {p}-core {core}")
    w = (n - core.n) // p
    if w % 2 == 0:
        raise CliffordError(f"weight {w} is even")
    if C_gamma(core, n, p):  # pragma: no cover - parity forbids it
        raise AssertionError("odd weight block meets T")
    datum = block_datum(build_tilde_basic_set(n, p, base, core), core)
    b1, b2 = restrict_to_block(datum, core)
    if b2:  # pragma: no cover - no Mullineux-fixed columns without T
        raise AssertionError("odd weight block has Mullineux-fixed columns")
    D = partial_decomposition_matrix(n, p, core, fock=False)
    return restrict_basic_set_to_An(D, datum)
