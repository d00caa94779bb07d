import json
from pathlib import Path

import pytest

from algebra.builders import (
    build_almost_stretched,
    build_hypersurface,
    build_R_mod_K,
    build_S_mod_L,
    build_S_mod_V,
    make_params,
)
from algebra.core import (
    FiniteLocalAlgebra,
    check_structure,
    embedding_dimension,
    hilbert_function,
    ideal_subspace,
    is_gorenstein,
    is_ideal,
    multiplicity,
    multiply,
    quotient,
    quotient_by_socle,
    quotient_with_map,
    same_table,
    socle,
    socle_degree,
)
from algebra.io import algebra_from_dict, algebra_to_dict, load_algebra, save_algebra
from algebra.linalg import Subspace, contains
from algebra.monomials import MonomialLabel
from algebra.registry import get_builder
from classification.hilbert_shapes import remark2_shape_params
from models.enums import Variant
from models.errors import AlgebraError, IdealError, InvalidParametersError, StructureError
from models.params import FieldSpec

DATA = Path(__file__).resolve().parents[1] / "data" / "algebras"

GRID = [(h, s, t) for h in (2, 3, 4) for (s, t) in ((3, 2), (4, 2), (4, 3), (5, 3))]


@pytest.fixture(scope="module")
def a342():
    return build_almost_stretched(make_params(3, 4, 2, 0))


@pytest.fixture(scope="module")
def a342_a1():
    return build_almost_stretched(make_params(3, 4, 2, 1))


# ----------------------------------------
# Labels
def test_monomial_label_parse_and_print():
    for text in ("1", "x1", "x1^3", "x2", "x1*x2", "x1^2*x2", "x4"):
        assert str(MonomialLabel.parse(text)) == text
    with pytest.raises(ValueError):
        MonomialLabel.parse("y1")


# ----------------------------------------
# Parameters
def test_invalid_parameters():
    with pytest.raises(InvalidParametersError):
        make_params(3, 2, 2)
    with pytest.raises(InvalidParametersError):
        make_params(1, 4, 2)
    with pytest.raises(InvalidParametersError):
        make_params(3, 3, 1)


def test_prime_must_exceed_bound():
    with pytest.raises(InvalidParametersError):
        build_almost_stretched(make_params(3, 4, 2), FieldSpec(prime=7))


# ----------------------------------------
# A(3,4,2,a)
def test_almost_stretched_structure(a342):
    assert a342.dim == 8
    assert multiplicity(a342) == 8
    assert embedding_dimension(a342) == 3
    assert hilbert_function(a342).values == (1, 3, 2, 1, 1)
    assert socle_degree(a342) == 4
    assert check_structure(a342) == []


def test_almost_stretched_is_gorenstein_with_socle_x1_s(a342):
    assert is_gorenstein(a342)
    assert contains(socle(a342), a342.element("x1^4").sparse)


def test_products(a342, a342_a1):
    x1, x2, x3 = (a342.element(l) for l in ("x1", "x2", "x3"))
    assert multiply(x2, x2) == a342.element("x1^3")
    assert x3 * x3 == a342.element("x1^4")
    assert (x1 * x3).is_zero()
    assert (x1 * x2) * x2 == a342.element("x1^4")

    y2 = a342_a1.element("x2")
    assert y2 * y2 == a342_a1.element("x1*x2") + a342_a1.element("x1^3")


def test_element_str(a342_a1):
    y2 = a342_a1.element("x2")
    assert str(y2 * y2) == "x1^3 + x1*x2"
    assert str(a342_a1.zero()) == "0"


@pytest.mark.parametrize("h,s,t", GRID)
@pytest.mark.parametrize("a", [0, 1])
def test_hilbert_shape_grid(h, s, t, a):
    A = build_almost_stretched(make_params(h, s, t, a))
    hf = hilbert_function(A)
    assert hf.values == (1, h) + (2,) * (t - 1) + (1,) * (s - t)
    assert remark2_shape_params(hf) == (s, t)
    assert socle(A).dim == 1


def test_stretched_flag():
    A = build_almost_stretched(make_params(3, 3, 1, stretched=True))
    assert hilbert_function(A).values == (1, 3, 1, 1)
    assert is_gorenstein(A)


# ----------------------------------------
# The other rings of the chain
@pytest.mark.parametrize("h", [2, 3, 4])
def test_socle_quotient_is_r_mod_k(h):
    p = make_params(h, 4, 3, 1)
    A = build_almost_stretched(p)
    assert same_table(quotient_by_socle(A), build_R_mod_K(p))


def test_two_variable_rings():
    sv = build_S_mod_V(3, 2)
    sl = build_S_mod_L(3, 2)
    assert sv.dim == 6 and sl.dim == 5
    assert is_gorenstein(sv)
    assert hilbert_function(sv).values == (1, 2, 2, 1)
    assert same_table(quotient_by_socle(sv), sl)


@pytest.mark.parametrize("h", [3, 4, 5])
def test_extra_variables_are_socle_elements_outside_m2(h):
    RK = build_R_mod_K(make_params(h, 4, 2, 1))
    m2 = RK.powers_of_m()[2]
    for j in range(3, h + 1):
        x = RK.element(f"x{j}").sparse
        assert contains(socle(RK), x)
        assert not contains(m2, x)


@pytest.mark.parametrize("h", [3, 4])
def test_r_mod_k_modulo_extra_variables_is_s_mod_l(h):
    RK = build_R_mod_K(make_params(h, 4, 2, 1))
    ideal = ideal_subspace(RK, [RK.element(f"x{j}") for j in range(3, h + 1)])
    assert same_table(quotient(RK, ideal), build_S_mod_L(4, 2, 1))


def test_r_mod_k_socle_small_case():
    RK = build_R_mod_K(make_params(3, 3, 2))
    assert contains(socle(RK), RK.element("x3").sparse)
    assert socle(RK) == Subspace.span_sparse(
        [RK.element(l).sparse for l in ("x1^2", "x1*x2", "x3")], RK.dim, RK.domain
    )


def test_quotient_by_one_extra_variable_lowers_embedding_dimension():
    RK = build_R_mod_K(make_params(4, 3, 2))
    Q = quotient(RK, ideal_subspace(RK, [RK.element("x3")]))
    assert Q.dim == RK.dim - 1
    assert embedding_dimension(RK) == 4
    assert embedding_dimension(Q) == 3


@pytest.mark.parametrize("s,t,a", [(3, 2, 0), (4, 2, 1), (5, 3, "1/2")])
def test_s_mod_v_socle_is_x1_s(s, t, a):
    SV = build_S_mod_V(s, t, a)
    assert is_gorenstein(SV)
    assert contains(socle(SV), SV.element(f"x1^{s}").sparse)


def test_ideal_generated_by_x3():
    A = build_almost_stretched(make_params(3, 3, 2))
    x1_cubed = A.element("x1^3")
    expected = Subspace.span_sparse([A.element("x3").sparse, x1_cubed.sparse], A.dim, A.domain)
    assert ideal_subspace(A, [A.element("x3")]) == expected
    assert A.element("x2") * A.element("x1*x2") == x1_cubed


def test_registry_builders():
    p = make_params(3, 3, 2)
    assert get_builder(Variant.RK)(p, None).dim == 6
    assert get_builder(Variant.SL)(p, None).dim == 5
    with pytest.raises(KeyError):
        get_builder(Variant.FILE)


# ----------------------------------------
# Ideals and quotients
def test_ideal_and_quotient(a342):
    ideal = ideal_subspace(a342, [a342.element("x1^3")])
    assert ideal.dim == 2
    assert is_ideal(a342, ideal)
    Q, project = quotient_with_map(a342, ideal)
    assert Q.dim == 6
    assert project(a342.element("x2") * a342.element("x2")).is_zero()


def test_quotient_preconditions(a342):
    with pytest.raises(IdealError):
        quotient(a342, ideal_subspace(a342, [a342.one()]))
    not_closed = Subspace.span_sparse([a342.element("x1").sparse], a342.dim, a342.domain)
    with pytest.raises(IdealError):
        quotient(a342, not_closed)


def test_hypersurface():
    A = build_hypersurface(4)
    assert hilbert_function(A).values == (1, 1, 1, 1)
    assert is_gorenstein(A)


# ----------------------------------------
# JSON import / export
def test_load_oracle_algebras():
    kx = load_algebra(DATA / "kx_mod_x3.json")
    assert kx.dim == 3
    assert hilbert_function(kx).values == (1, 1, 1)
    assert same_table(kx, build_hypersurface(3))

    field = load_algebra(DATA / "field.json")
    assert field.dim == 1
    assert is_gorenstein(field)
    assert hilbert_function(field).values == (1,)


def test_round_trip(tmp_path):
    A = build_almost_stretched(make_params(2, 4, 3, "1/2"))
    again = algebra_from_dict(algebra_to_dict(A))
    assert same_table(A, again)
    path = save_algebra(A, tmp_path / "a.json")
    assert same_table(A, load_algebra(path))


def test_import_rejects_bad_tables(tmp_path):
    with pytest.raises(AlgebraError):
        algebra_from_dict({"basis": ["1"]})
    # x1^2 = 1 is not local
    bad = {"basis": ["1", "x1"], "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]]}
    with pytest.raises(StructureError):
        algebra_from_dict(bad)
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(AlgebraError):
        load_algebra(path)


def test_direct_construction_validates():
    field = FieldSpec()
    K = field.domain
    basis = [MonomialLabel(), MonomialLabel(e1=1)]
    table = [[[K.one, K.zero], [K.zero, K.one]], [[K.zero, K.one], [K.zero, K.zero]]]
    A = FiniteLocalAlgebra(field, basis, table, name="k[x]/(x^2)")
    assert A.dim == 2
    assert json.loads(json.dumps(algebra_to_dict(A)))["basis"] == ["1", "x1"]
