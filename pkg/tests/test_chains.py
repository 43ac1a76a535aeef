import pytest
from hypothesis import given
from hypothesis import strategies as st

from homops.abgroup import FgAbGroup, IntMatrix
from homops.chains import ChainComplex, homology, kunneth_check, moore_complex, tensor_complex
from homops.errors import DegreeTooSmall
from homops.functors import tensor, tor

from conftest import degrees, groups

P = FgAbGroup.parse


def _dd_zero(c: ChainComplex) -> bool:
    return all((c.boundary(n - 1) @ c.boundary(n)).is_zero() for n in c.degrees if c.rank(n - 2) and c.rank(n))


def test_moore_complex_of_cyclic():
    c = moore_complex(P("Z/6"), 4)
    assert (c.rank(4), c.rank(5)) == (1, 1)
    assert c.boundary(5).to_rows() == [[6]]
    assert homology(c, 4) == P("Z/6")


def test_moore_complex_of_sphere():
    c = moore_complex(P("Z"), 3)
    assert (c.rank(3), c.rank(4)) == (1, 0) and not c.boundaries
    assert homology(c, 3) == P("Z")


def test_moore_complex_mixed_orientation():
    c = moore_complex(P("Z + Z/2"), 5)
    assert (c.rank(5), c.rank(6)) == (2, 1)
    assert c.boundary(6).to_rows() == [[0], [2]]
    assert homology(c, 5) == P("Z + Z/2")


def test_moore_complex_degree_floor():
    with pytest.raises(DegreeTooSmall):
        moore_complex(P("Z/2"), 1)


def test_rejects_nonzero_square():
    d = IntMatrix.from_rows([[1]])
    with pytest.raises(ValueError):
        ChainComplex({0: 1, 1: 1, 2: 1}, {1: d, 2: d})


def test_rejects_shape_mismatch():
    with pytest.raises(ValueError):
        ChainComplex({0: 1, 1: 2}, {1: IntMatrix.from_rows([[1]])})


@pytest.mark.parametrize("a,b,expected", [
    (("Z", 3), ("Z", 4), {7: "Z", 8: "0"}),
    (("Z/2", 3), ("Z/3", 3), {6: "0", 7: "0"}),
    (("Z/4", 4), ("Z/6", 5), {9: "Z/2", 10: "Z/2", 11: "0"}),
])
def test_tensor_complex_homology(a, b, expected):
    cx = tensor_complex(moore_complex(P(a[0]), a[1]), moore_complex(P(b[0]), b[1]))
    for n, g in expected.items():
        assert homology(cx, n) == P(g)


def test_homology_outside_support_is_trivial():
    c = moore_complex(P("Z/6"), 4)
    assert homology(c, 2).is_trivial and homology(c, 40).is_trivial


@pytest.mark.parametrize("g1,q1,g2,q2,checks", [
    ("Z/3", 4, "Z/3", 4, {8: "Z/3", 9: "Z/3"}),
    ("Z", 3, "Z/5", 3, {6: "Z/5", 7: "0"}),
    ("Z^2", 2, "Z^3", 2, {4: "Z^6"}),
])
def test_kunneth_examples(g1, q1, g2, q2, checks):
    report = kunneth_check(P(g1), q1, P(g2), q2)
    assert report.passed
    computed = {c.degree: c.computed for c in report.checks}
    for n, g in checks.items():
        assert computed[n] == P(g)


def test_kunneth_report_lists_degrees():
    d = kunneth_check(P("Z/4"), 4, P("Z/6"), 5).to_dict()
    assert [row["degree"] for row in d["degrees"]] == [8, 9, 10, 11]
    assert d["passed"] is True


@given(groups(), degrees)
def test_moore_complex_homology_is_concentrated(g, n):
    c = moore_complex(g, n)
    assert homology(c, n) == g
    assert all(homology(c, k).is_trivial for k in (n - 1, n + 1, n + 2))


@given(groups(), degrees, groups(), degrees)
def test_tensor_boundaries_square_to_zero(g1, q1, g2, q2):
    for sign_on in ("first", "second"):
        assert _dd_zero(tensor_complex(moore_complex(g1, q1), moore_complex(g2, q2), sign_on))


@given(groups(), degrees, groups(), degrees)
def test_sign_convention_does_not_change_homology(g1, q1, g2, q2):
    a, b = moore_complex(g1, q1), moore_complex(g2, q2)
    first, second = tensor_complex(a, b, "first"), tensor_complex(a, b, "second")
    for n in range(q1 + q2 - 1, q1 + q2 + 3):
        assert homology(first, n) == homology(second, n)


@given(groups(), degrees, groups(), degrees)
def test_kunneth_holds(g1, q1, g2, q2):
    report = kunneth_check(g1, q1, g2, q2)
    assert report.passed, report.to_dict()
    q = q1 + q2
    by_degree = {c.degree: c.computed for c in report.checks}
    assert by_degree[q] == tensor(g1, g2)
    assert by_degree[q + 1] == tor(g1, g2)


@given(groups(), degrees, groups(), degrees)
def test_tensor_ranks_multiply(g1, q1, g2, q2):
    a, b = moore_complex(g1, q1), moore_complex(g2, q2)
    cx = tensor_complex(a, b)
    for n in cx.degrees:
        assert cx.rank(n) == sum(a.rank(i) * b.rank(n - i) for i in a.degrees)


@given(st.integers(0, 3))
def test_sign_on_must_be_named(_):
    with pytest.raises(ValueError):
        tensor_complex(moore_complex(P("Z"), 2), moore_complex(P("Z"), 2), "left")
