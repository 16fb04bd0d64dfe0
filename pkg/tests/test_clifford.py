from fractions import Fraction

import pytest

from modrep.basicsets import BasicSetDatum, DecompMatrixModel, verify_unitriangular_basic_set
from modrep.clifford import (
    AnLabel,
    CliffordError,
    C_gamma,
    G_gamma,
    an_shape,
    block_descriptor,
    block_of,
    blocks,
    count_IBr_An,
    epsilon_on_block,
    in_T,
    in_T_via_quotient,
    induce_basic_set_to_Sn,
    odd_weight_basic_set,
    restrict_basic_set_to_An,
    split_class_values,
    validate_An_basic_set_labels,
)
from modrep.partitions import (
    Partition,
    conjugate,
    p_cores_of,
    partitions_of,
    self_conjugate_partitions_of,
)
from modrep.scenarios import load_golden

P = Partition
PSI5 = P((3, 2, 1))


@pytest.fixture(scope="module")
def s6():
    D = load_golden("s6_block0_ex2_14.json")
    datum = BasicSetDatum(D.rows, tuple(reversed(D.rows)), dict(zip(D.rows, D.cols)), 3, 6)
    return D, datum


def display(D, datum):
    rows = [x for x in reversed(datum.order) if x in datum.psi]
    return D.submatrix(rows, [datum.psi[x] for x in rows])


# -- labels and blocks ------------------------------------------------------------------

def test_labels():
    assert str(AnLabel.row((3, 2, 1), "+")) == "psi(3,2,1)+"
    assert AnLabel.row((1, 1, 1, 1, 1, 1)) == AnLabel.row((6,))
    assert AnLabel.col((2, 2, 1), 3) == AnLabel.col((4, 1), 3)
    assert AnLabel.parse("phi(4,1,1)-") == AnLabel.col((4, 1, 1), 3, "-")
    assert AnLabel.row(PSI5, "+").partner() == AnLabel.row(PSI5, "-")
    lab = AnLabel.row((5, 1))
    assert AnLabel.from_json(lab.to_json()) == lab
    with pytest.raises(CliffordError):
        AnLabel.row(PSI5)
    with pytest.raises(CliffordError):
        AnLabel.row((5, 1), "+")
    with pytest.raises(CliffordError):
        AnLabel.col((5, 1), 3, "+")


def test_blocks():
    assert block_of((3, 2, 1), 3).core == () and block_of((3, 2, 1), 3).weight == 2
    bs = blocks(6, 3)
    assert sum(len(b.members) for b in bs) == len(list(partitions_of(6)))
    assert epsilon_on_block(block_descriptor(6, 3, ())).core == ()
    assert epsilon_on_block(block_descriptor(5, 3, (2,))).core == (1, 1)
    assert epsilon_on_block(block_descriptor(23, 3, (3, 1, 1))).core == (3, 1, 1)
    with pytest.raises(CliffordError):
        block_descriptor(7, 3, ())


# -- the sets T, G, C -------------------------------------------------------------------

def test_C_gamma_examples():
    assert C_gamma((), 18, 3) == [(9, 2) + (1,) * 7, (7, 4, 2, 2, 1, 1, 1), (6, 5, 2, 2, 2, 1)]
    assert set(C_gamma((1,), 19, 3)) == {(6, 5, 3, 2, 2, 1), (7, 4, 3, 2, 1, 1, 1), (10,) + (1,) * 9}
    assert in_T(PSI5, 3)
    assert set(C_gamma((), 6, 3)) == {PSI5}


@pytest.mark.parametrize("p", [3, 5, 7])
def test_two_characterisations_of_T_agree(p):
    for n in range(26):
        for lam in self_conjugate_partitions_of(n):
            assert in_T(lam, p) == in_T_via_quotient(lam, p)


def test_hook_and_quotient_descriptions_agree_per_block():
    for p in (3, 5):
        for n in range(1, 21):
            for gamma in {P(b.core) for b in blocks(n, p)}:
                assert G_gamma(gamma, n, p) == C_gamma(gamma, n, p)


@pytest.mark.parametrize("p", [3, 5])
def test_odd_weight_self_conjugate_cores_have_empty_C(p):
    for size in range(26):
        for gamma in p_cores_of(size, p):
            if conjugate(gamma) != gamma:
                continue
            for w in range(1, (25 - size) // p + 1, 2):
                assert C_gamma(gamma, size + p * w, p) == []


# -- split class values -------------------------------------------------------------------

def test_split_class_values():
    v = split_class_values((2, 1))[("+", "+")]
    assert v.x == Fraction(-1, 2) and v.y_radicand == 3 and v.imaginary
    w = split_class_values(PSI5)[("+", "+")]
    assert w.x == Fraction(1, 2) and w.y_radicand == 5 and not w.imaginary and w.y_sign == 1
    assert split_class_values(PSI5)[("+", "-")].y_sign == -1
    with pytest.raises(CliffordError):
        split_class_values((2,))


# -- shapes and counts ----------------------------------------------------------------------

def test_shapes():
    (s6,) = an_shape(block_descriptor(6, 3, ()))
    assert len(s6.cols) == 4 and len(s6.rows) == 6
    pair = an_shape(block_descriptor(5, 3, (2,)))
    assert len(pair) == 1 and not any(c.split for c in pair[0].cols)
    defect0 = an_shape(block_descriptor(5, 3, (3, 1, 1)))
    assert len(defect0) == 2


def test_count_IBr():
    assert count_IBr_An([(6,), (1,) * 6, (5, 1), (2, 1, 1, 1, 1), PSI5]) == 4
    assert count_IBr_An([(2,), (1, 1)], 0) == 1
    assert count_IBr_An([(2, 1)], 1) == 2


# -- restriction and induction ------------------------------------------------------------

def test_restriction_reproduces_printed_matrix(s6):
    D, datum = s6
    D_An, b = restrict_basic_set_to_An(D, datum)
    assert display(D_An, b) == [[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [1, 1, 0, 1]]
    assert verify_unitriangular_basic_set(D_An, b)
    assert [str(x) for x in reversed(b.order)] == ["psi(6)", "psi(5,1)", "psi(3,2,1)+", "psi(3,2,1)-"]
    assert validate_An_basic_set_labels(b.B, (), 6, 3)["ok"]


def test_restriction_rejects_non_equivariant_input(s6):
    D, datum = s6
    psi = dict(datum.psi)
    a, b = P((6,)), P((5, 1))
    psi[a], psi[b] = psi[b], psi[a]
    with pytest.raises(CliffordError):
        restrict_basic_set_to_An(D, BasicSetDatum(datum.B, datum.order, psi, 3, 6))


def test_restriction_without_split_rows():
    two, one_one = P((2,)), P((1, 1))
    D = DecompMatrixModel((two, one_one), (two, one_one), [[1, 0], [0, 1]], 3, 2)
    datum = BasicSetDatum((two, one_one), (one_one, two), {two: two, one_one: one_one}, 3, 2)
    D_An, b = restrict_basic_set_to_An(D, datum)
    assert len(b.B) == 1 and not b.B[0].split
    assert [list(r) for r in D_An.entries] == [[1]]


def test_induction_has_one_unknown_block(s6):
    D, datum = s6
    D_An, b = restrict_basic_set_to_An(D, datum)
    D_Sn, B = induce_basic_set_to_Sn(D_An, b)
    shown = display(D_Sn, B)
    assert shown == [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [None, None, 1, 0, 0],
                     [None, None, 0, 1, 0], [1, 1, 1, 1, 1]]
    assert len(D_Sn.meta["constraints"]) == 1
    assert set(B.B) == set(datum.B) and dict(B.psi) == dict(datum.psi)


def test_alternative_An_basic_set_induces_the_same_set(s6):
    D, datum = s6
    ex20 = load_golden("a6_block0_ex2_20.json")
    rows = ex20.rows
    b20 = BasicSetDatum(rows, tuple(reversed(rows)), dict(zip(rows, ex20.cols)), 3, 6)
    assert ex20.row(rows[-1]) == (0, 1, 1, 1)
    assert verify_unitriangular_basic_set(ex20, b20)
    _, B = induce_basic_set_to_Sn(ex20, b20)
    assert set(B.B) == set(datum.B) and dict(B.psi) == dict(datum.psi)


def test_label_validation_failures(s6):
    D, datum = s6
    _, b = restrict_basic_set_to_An(D, datum)
    without = [x for x in b.B if not x.split]
    assert not validate_An_basic_set_labels(without, (), 6, 3)["ok"]
    stray = list(b.B) + [AnLabel.row((4, 2, 1, 1), "+")]
    assert not validate_An_basic_set_labels(stray, (), 6, 3)["ok"]


# -- odd weight -------------------------------------------------------------------------------

def test_odd_weight_basic_set():
    with pytest.raises(CliffordError):
        odd_weight_basic_set(18, 3, ())
    D, b = odd_weight_basic_set(3, 3, ())
    assert verify_unitriangular_basic_set(D, b, allow_unknown=True)
    D, b = odd_weight_basic_set(14, 3, (3, 1, 1))
    assert not any(x.split for x in b.B)
    assert verify_unitriangular_basic_set(D, b, allow_unknown=True)
