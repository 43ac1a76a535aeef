import pytest
from hypothesis import given

from homops import functors
from homops.abgroup import FgAbGroup, GroupMorphism, IntMatrix, order
from homops.functors import FunctorKind, apply, ext, hom, hom_pullback, hom_pushforward, tensor, tor

from conftest import groups

P = FgAbGroup.parse
ALL = [FunctorKind.HOM, FunctorKind.EXT, FunctorKind.TENSOR, FunctorKind.TOR]


@pytest.mark.parametrize("fn,g,h,expected", [
    (tensor, "Z/4", "Z/6", "Z/2"),
    (tensor, "Z", "Z + Z/5", "Z + Z/5"),
    (tensor, "Z + Z/2", "Z/4", "Z/2 + Z/4"),
    (tor, "Z/9", "Z/3", "Z/3"),
    (tor, "Z^3", "Z/8", "0"),
    (tor, "Z/4 + Z/3", "Z/6", "Z/6"),
    (hom, "Z/4", "Z/6", "Z/2"),
    (hom, "Z", "Z^2 + Z/7", "Z^2 + Z/7"),
    (hom, "Z/7", "Z", "0"),
    (ext, "Z/5", "Z", "Z/5"),
    (ext, "Z^5", "Z/3 + Z", "0"),
    (ext, "Z/4", "Z/6", "Z/2"),
])
def test_functor_examples(fn, g, h, expected):
    assert fn(P(g), P(h)) == P(expected)


def test_free_by_free():
    assert hom(P("Z^2"), P("Z^3")) == P("Z^6")
    assert tensor(P("Z^2"), P("Z^3")) == P("Z^6")
    assert ext(P("Z^2"), P("Z^3")).is_trivial


def test_apply_accepts_tag_strings():
    assert apply("tor", P("Z/4"), P("Z/6")) == P("Z/2")
    with pytest.raises(ValueError):
        apply("cotor", P("Z"), P("Z"))


@given(groups(max_summands=4), groups(max_summands=4))
def test_tensor_and_tor_are_symmetric(g, h):
    assert tensor(g, h) == tensor(h, g)
    assert tor(g, h) == tor(h, g)


@given(groups(finite=True), groups(finite=True))
def test_finite_functors_have_equal_orders(g, h):
    n = order(hom(g, h))
    assert order(ext(g, h)) == order(tensor(g, h)) == order(tor(g, h)) == n


@given(groups(), groups(), groups())
def test_additive_in_each_argument(g, g2, h):
    for kind in ALL:
        assert apply(kind, g + g2, h) == apply(kind, g, h) + apply(kind, g2, h)
        assert apply(kind, h, g + g2) == apply(kind, h, g) + apply(kind, h, g2)


@given(groups(), groups())
def test_tor_vanishes_on_free_arguments(g, h):
    if g.is_free or h.is_free:
        assert tor(g, h).is_trivial


@given(groups())
def test_units(g):
    assert tensor(FgAbGroup.free(), g) == g
    assert hom(FgAbGroup.free(), g) == g
    assert ext(FgAbGroup.free(), g).is_trivial


# --- induced maps on cyclic groups ---------------------------------------------


def test_pullback_of_multiplication():
    # f = 2: Z/4 -> Z/4, so f^*: Hom(Z/4, Z/6) = Z/2 -> Z/2 is multiplication by 2 = 0
    z4, z6 = FgAbGroup.cyclic(4), FgAbGroup.cyclic(6)
    f = GroupMorphism(z4, z4, IntMatrix.from_rows([[2]]))
    induced = hom_pullback(f, z6)
    assert induced.source == induced.target == FgAbGroup.cyclic(2)
    assert induced((1,)) == (0,)


def test_pullback_along_projection_is_injective():
    # p: Z -> Z/3; p^*: Hom(Z/3, Z/3) -> Hom(Z, Z/3) = Z/3 sends the identity to p
    p = GroupMorphism(FgAbGroup.free(), FgAbGroup.cyclic(3), IntMatrix.from_rows([[1]]))
    induced = hom_pullback(p, FgAbGroup.cyclic(3))
    assert [induced((x,)) for x in range(3)] == [(0,), (1,), (2,)]


def test_pushforward_of_inclusion():
    # i: Z/2 -> Z/4 (1 -> 2); i_*: Hom(Z/2, Z/2) -> Hom(Z/2, Z/4), both Z/2, an isomorphism
    i = GroupMorphism(FgAbGroup.cyclic(2), FgAbGroup.cyclic(4), IntMatrix.from_rows([[2]]))
    induced = hom_pushforward(FgAbGroup.cyclic(2), i)
    assert induced((1,)) == (1,)


def test_induced_maps_reject_non_cyclic():
    g = P("Z/2 + Z/2")
    ident = GroupMorphism(g, g, IntMatrix.identity(2))
    with pytest.raises(ValueError):
        hom_pullback(ident, FgAbGroup.cyclic(2))


def test_kind_tags():
    assert [k.value for k in FunctorKind] == ["hom", "ext", "tensor", "tor"]
    assert functors.FunctorKind("ext") is FunctorKind.EXT
