import pytest

from hopfint.comodules import (
    double_dual_twist, dual_comodule, regular_comodule, tensor_comodule, trivial_comodule,
)
from hopfint.dual_conv import verify_module
from hopfint.gp_functors import (
    adjunction_check, functor_T, functor_U, hom_sequence_check, regular_hom_check, right_dual_check,
    twist_iso_check, ut_identity_check,
)
from hopfint.integrals import gamma_comodule


def _objects(h):
    reg = regular_comodule(h)
    return {"k": trivial_comodule(h), "Γ": gamma_comodule(h), "H": reg, "H*": dual_comodule(reg)}


@pytest.fixture
def objects(catalog_algebra):
    return _objects(catalog_algebra)


@pytest.mark.parametrize("obj", ["k", "Γ", "H", "H*"])
def test_functors_preserve_dimension(objects, obj):
    m = objects[obj]
    t = functor_T(m)
    assert t.module.dim == m.dim
    assert verify_module(t.module).ok
    assert functor_U(m).dim == m.dim


@pytest.mark.parametrize("name", ["sweedler", "taft3"])
def test_u_undoes_the_double_dual(request, name):
    h = request.getfixturevalue(name)
    m = regular_comodule(h)
    u = functor_U(m)
    expected = tensor_comodule(m, dual_comodule(gamma_comodule(h)))
    assert double_dual_twist(u, 1).same_coaction(expected)
    assert u.label == "U(H)"


@pytest.mark.parametrize("obj", ["k", "Γ", "H"])
def test_t_is_the_twisted_double_dual(objects, obj):
    report = twist_iso_check(objects[obj])
    assert report.ok, report.failures()


@pytest.mark.parametrize("pair", [("k", "k"), ("k", "H"), ("H", "Γ"), ("Γ", "H*"), ("H*", "H")])
def test_adjunction_dimensions(objects, pair):
    a, b = pair
    report = adjunction_check(objects[a], objects[b])
    assert report.ok
    assert report.dim_comodule_side == report.dim_module_side


@pytest.mark.parametrize("obj", ["k", "Γ", "H"])
def test_u_after_t_is_the_identity(objects, obj):
    report = ut_identity_check(objects[obj], seed=1729, attempts=32)
    assert report.ok
    assert report.status == "isomorphic"


@pytest.mark.parametrize("obj", ["k", "Γ", "H"])
def test_right_dual(objects, obj):
    assert right_dual_check(objects[obj], seed=1729, attempts=32).ok


def test_hom_sequence(catalog_algebra):
    report = hom_sequence_check(catalog_algebra)
    assert report.ok
    assert report.hom_dim == 1


@pytest.mark.parametrize("obj", ["k", "Γ", "H"])
def test_hom_counts_into_regular(objects, obj):
    report = regular_hom_check(objects[obj])
    assert report.ok
    assert report.dim_u == report.expected_dim_u == objects[obj].dim
