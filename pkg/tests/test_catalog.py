import pytest

from hopfint import catalog
from hopfint.errors import InvalidInput
from hopfint.exactla import Field

Q = Field.rationals()
F5 = Field.prime(5)
F7 = Field.prime(7)


def test_cyclic_and_symmetric_tables_are_groups():
    assert catalog.validate_group_table(catalog.cyclic_table(4)) == (0, [0, 3, 2, 1])
    identity, inverses = catalog.validate_group_table(catalog.symmetric_table(3))
    assert identity == 0
    assert len(inverses) == 6


@pytest.mark.parametrize("table", [
    [],
    [[0, 1]],
    [[0, 5], [5, 0]],
    [[0, 0], [0, 0]],
    [[0, 1, 2], [1, 2, 0], [2, 0, 0]],
    [["a", "b"], ["b", "a"]],
])
def test_bad_cayley_tables_are_rejected(table):
    with pytest.raises(InvalidInput):
        catalog.validate_group_table(table)


@pytest.mark.parametrize("name", ["kc2", "kc3", "ks3", "dual_c3", "sweedler", "taft3"])
def test_catalog_algebras_verify(request, name):
    h = request.getfixturevalue(name)
    assert h.verification.ok, h.verification.diagnostic()


def test_group_algebra_over_prime_field():
    h = catalog.group_algebra(catalog.symmetric_table(3), F5)
    assert h.verification.ok
    assert str(h.field) == "F5"


def test_group_algebra_labels_and_name(kc3):
    assert kc3.basis == ("g0", "g1", "g2")
    assert kc3.label == "k[G3]"


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(InvalidInput):
        catalog.sweedler4(Field.prime(2))
    assert catalog.sweedler4(F7).verification.ok


def test_taft_two_is_sweedler(sweedler):
    assert catalog.taft(2, Q, -1).same_tensors(sweedler)
    assert catalog.taft(2, Q, "−1").basis == sweedler.basis


def test_taft_basis_order(taft3):
    assert taft3.dim == 9
    assert taft3.basis[:5] == ("1", "g", "g^2", "x", "gx")
    assert taft3.basis[-1] == "g^2x^2"


def test_taft_four_over_f5():
    assert catalog.taft(4, F5, 2).verification.ok


@pytest.mark.parametrize("n, field, q", [
    (1, Q, 1),
    (2, Q, 1),
    (3, F7, 3),
    (3, F7, 0),
])
def test_taft_needs_a_primitive_root(n, field, q):
    with pytest.raises(InvalidInput):
        catalog.taft(n, field, q)
