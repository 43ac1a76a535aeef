import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from homops import functors
from homops.abgroup import FgAbGroup, order
from homops.chains import homology, moore_complex, tensor_complex
from homops.errors import DegreeTooSmall, Unknown, Unsupported2Torsion
from homops.moorecalc import (
    MooreAtom,
    MooreExpr,
    StemTable,
    default_stem_table,
    homotopy_with_coeffs,
    pi_group,
    smash_decompose,
    stem,
)

from conftest import degrees, groups

P = FgAbGroup.parse
M = MooreExpr.parse


# --- expressions ---------------------------------------------------------------


def test_parse_and_render():
    x = M("Z/3@9 | Z/3@8")
    assert str(x) == "Z/3@8 | Z/3@9"
    assert M("*").is_point
    assert M("0@4").is_point
    with pytest.raises(ValueError):
        M("Z/3")
    with pytest.raises(DegreeTooSmall):
        M("Z@1")


def test_wedge_merges_equal_degrees_and_suspension_distributes():
    x = M("Z/2@4").wedge(M("Z/3@4 | Z@6"))
    assert x == M("Z/6@4 | Z@6")
    assert x.suspend(2) == M("Z/6@6 | Z@8")


@given(groups(), degrees, groups(), degrees)
def test_wedge_homology_and_complex_agree(g, n, h, m):
    x = MooreExpr.atom(g, n).wedge(MooreExpr.atom(h, m))
    cx = x.to_complex()
    for k in range(1, 10):
        assert homology(cx, k) == x.homology(k)


# --- smash decomposition ---------------------------------------------------------


def test_decompose_examples():
    assert smash_decompose(M("Z/3@4"), M("Z/3@4")) == M("Z/3@8 | Z/3@9")
    assert smash_decompose(M("Z@3"), M("Z@5")) == M("Z@8")
    with pytest.raises(Unsupported2Torsion):
        smash_decompose(M("Z/2@4"), M("Z/6@4"))


def test_decompose_allows_one_side_with_2_torsion():
    # Z/4 has 2-torsion, Z/3 does not
    assert smash_decompose(M("Z/4@3"), M("Z/3@3")).is_point
    assert smash_decompose(M("Z/4@3"), M("Z@3")) == M("Z/4@6")


def test_decompose_distributes_over_wedges():
    a = M("Z@3 | Z/3@5")
    b = M("Z/5@4")
    assert smash_decompose(a, b) == M("Z/5@7")
    assert smash_decompose(a, M("Z/3@4")) == M("Z/3@7 | Z/3@9 | Z/3@10")


def test_decompose_accepts_atoms():
    assert smash_decompose(MooreAtom(3, P("Z")), MooreAtom(5, P("Z"))) == M("Z@8")


@given(groups(), degrees, groups(), degrees)
def test_decompose_is_symmetric(g1, q1, g2, q2):
    assume(not (g1.has_2_torsion and g2.has_2_torsion))
    a, b = MooreExpr.atom(g1, q1), MooreExpr.atom(g2, q2)
    assert smash_decompose(a, b) == smash_decompose(b, a)


@given(groups(), degrees, groups(), degrees)
def test_decompose_matches_tensor_complex_homology(g1, q1, g2, q2):
    a, b = MooreExpr.atom(g1, q1), MooreExpr.atom(g2, q2)
    if g1.has_2_torsion and g2.has_2_torsion:
        with pytest.raises(Unsupported2Torsion):
            smash_decompose(a, b)
        return
    w = smash_decompose(a, b)
    cx = tensor_complex(moore_complex(g1, q1), moore_complex(g2, q2))
    for n in range(q1 + q2 - 1, q1 + q2 + 3):
        assert homology(cx, n) == w.homology(n)


# --- stems -------------------------------------------------------------------------


def test_stem_examples():
    assert stem(P("Z/3"), 1, 8).is_trivial
    assert stem(P("Z"), 1, 7) == P("Z/2")
    assert stem(P("Z/2 + Z/4"), 1, 6) == P("Z/2 + Z/2")


def test_stem_one_counts_summands():
    assert stem(P("Z^3 + Z/12"), 1, 5) == P("Z/2 + Z/2 + Z/2 + Z/2")


def test_stem_degree_floor():
    with pytest.raises(DegreeTooSmall):
        stem(P("Z/3"), 1, 2)
    assert stem(P("Z/3"), 0, 2) == P("Z/3")


def test_stem_outside_stable_range_is_unknown():
    r = stem(P("Z"), 3, 4)
    assert isinstance(r, Unknown) and "stable range" in r.reason


def test_missing_stem_is_unknown():
    r = stem(P("Z/5"), 3, 6)
    assert isinstance(r, Unknown)
    assert r.reason.startswith("stem 3 not tabulated")


@given(groups(), st.integers(2, 9))
def test_stem_zero_is_hurewicz(g, n):
    assert stem(g, 0, n) == g


def test_stem_table_round_trip_and_override(tmp_path):
    base = default_stem_table()
    assert StemTable.loads(base.dumps()).entries == base.entries
    extra = tmp_path / "extra.txt"
    extra.write_text("# version: 2\nclass=Z/3, stem=2, value=0, provenance=test record\n"
                     "class=odd, stem=1, value=Z/7, provenance=deliberately wrong, for the test\n")
    merged = base.merged(StemTable.load(extra))
    assert stem(P("Z/3"), 2, 6, merged).is_trivial
    assert stem(P("Z/9"), 1, 6, merged) == P("Z/7")
    assert isinstance(stem(P("Z/9"), 2, 6, merged), Unknown)


@pytest.mark.parametrize("line", [
    "class=Z, stem=0, value=Z, provenance=x",
    "class=Z/6, stem=1, value=0, provenance=x",
    "class=Z, stem=1, value=Q, provenance=x",
    "class=Z stem=1",
])
def test_stem_table_rejects_bad_records(line):
    with pytest.raises(ValueError):
        StemTable.loads(line)


def test_pi_group_gate():
    x = M("Z@4 | Z@5")
    assert pi_group(x, 5) == P("Z + Z/2")
    assert pi_group(x, 3).is_trivial
    gated = pi_group(x, 8)
    assert isinstance(gated, Unknown) and "split range" in gated.reason


# --- universal coefficients -----------------------------------------------------------


def test_uct_examples():
    s = homotopy_with_coeffs(M("Z/3@8"), 8, P("Z/3"))
    assert (s.ext_term, s.hom_term, s.middle_cardinality) == (P("0"), P("Z/3"), 3)
    for k in range(2, 9):
        s = homotopy_with_coeffs(M("Z@5"), 5, FgAbGroup.cyclic(k))
        assert s.ext_term == FgAbGroup.cyclic(math.gcd(k, 2))
        assert s.hom_term.is_trivial
        assert s.middle_cardinality == math.gcd(k, 2)
    s = homotopy_with_coeffs(M("Z/5@6"), 9, P("Z/5"))
    assert isinstance(s.middle_cardinality, Unknown)
    assert "stem 3 not tabulated" in s.middle_cardinality.reason


def test_uct_infinite_and_serialisation():
    s = homotopy_with_coeffs(M("Z@4"), 4, P("Z"))
    assert s.middle_cardinality == math.inf
    d = s.to_dict()
    assert d["middle_cardinality"] == "infinite"
    assert d["pi_n"] == "Z"


@given(groups(max_summands=2), st.integers(3, 8), st.integers(2, 10), groups(max_summands=2))
def test_uct_cardinality_is_product_of_outer_orders(g, deg, n, coeff):
    s = homotopy_with_coeffs(MooreExpr.atom(g, deg), n, coeff)
    if s.is_known and s.ext_term.is_finite and s.hom_term.is_finite:
        assert s.middle_cardinality == order(s.ext_term) * order(s.hom_term)
        assert s.ext_term == functors.ext(coeff, s.pi_n_plus_1)
        assert s.hom_term == functors.hom(coeff, s.pi_n)


@given(groups(max_summands=2), st.integers(3, 8), st.integers(3, 9), groups(finite=True), groups(finite=True))
def test_uct_is_multiplicative_in_coefficients(g, deg, n, c1, c2):
    x = MooreExpr.atom(g, deg)
    a, b, ab = (homotopy_with_coeffs(x, n, c) for c in (c1, c2, c1 + c2))
    if a.is_known and b.is_known:
        assert ab.middle_cardinality == a.middle_cardinality * b.middle_cardinality
