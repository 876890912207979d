"""Fox derivatives and the 2-complex chain data.

The oracle for the derivative is the fundamental identity
w - 1 = da(w)(a - 1) + db(w)(b - 1) in the free ring, which determines
both derivatives and is checked on random unreduced words.
"""

import random

import pytest

from bsfour import foxchain
from bsfour.foxchain import FoxComplex, build_complex, fox_derivative, relator_word
from bsfour.groupring import FreeRingElt, GroupRingElt, geometric_series

from support import random_word

W = FreeRingElt.from_word
KS_NONZERO = [k for k in range(-12, 13) if k != 0]


def test_single_letter_derivatives():
    one = FreeRingElt.one()
    zero = FreeRingElt.zero()
    assert fox_derivative("a", "a") == one
    assert fox_derivative("A", "a") == -W("A")
    assert fox_derivative("b", "a") == zero
    assert fox_derivative("b", "b") == one
    assert fox_derivative("B", "b") == -W("B")
    assert fox_derivative("", "a") == zero


def test_product_rule():
    rng = random.Random(42)
    for _ in range(200):
        u = random_word(rng, 15)
        v = random_word(rng, 15)
        for g in "ab":
            lhs = fox_derivative(u + v, g)
            rhs = fox_derivative(u, g) + W(u) * fox_derivative(v, g)
            assert lhs == rhs


def test_fundamental_identity():
    rng = random.Random(43)
    a1 = W("a") - FreeRingElt.one()
    b1 = W("b") - FreeRingElt.one()
    for _ in range(500):
        w = random_word(rng, 30)
        lhs = W(w) - FreeRingElt.one()
        rhs = fox_derivative(w, "a") * a1 + fox_derivative(w, "b") * b1
        assert lhs == rhs


def test_relator_word():
    assert relator_word(3) == "abABBB"
    assert relator_word(-2) == "abAbb"
    assert relator_word(0) == "abA"
    assert relator_word(1) == "abAB"


@pytest.mark.parametrize("k", range(-12, 13))
def test_relator_derivatives_match_displayed_formulas(k):
    r = relator_word(k)
    # da r = 1 - a b a^-1
    assert fox_derivative(r, "a") == FreeRingElt.one() - W("abA")
    # db r = a - a b a^-1 b^-k (b^k - 1)/(b - 1)
    b_minus_k = W("B" * k if k >= 0 else "b" * (-k))
    expected = W("a") - W("abA") * b_minus_k * geometric_series(k)
    assert fox_derivative(r, "b") == expected


@pytest.mark.parametrize("k", KS_NONZERO)
def test_chain_condition(k):
    cx = build_complex(k)
    assert cx.ranks == (1, 2, 1)
    total = GroupRingElt.zero(k)
    for i in range(2):
        total = total + cx.d2[0][i] * cx.d1[i][0]
    assert total.is_zero()


def test_projected_boundary_at_k1():
    cx = build_complex(1)
    one = GroupRingElt.one(1)
    assert cx.d2[0][0] == one - GroupRingElt.from_word(1, "b")
    assert cx.d2[0][1] == GroupRingElt.from_word(1, "a") - one


def test_circle_complex_at_k0():
    cx = build_complex(0)
    assert cx.ranks == (0, 1, 1)
    assert cx.d2 == ()
    assert cx.d1[0][0] == GroupRingElt.one(0) - GroupRingElt.from_word(0, "a")
    D2, D1 = foxchain.tensor_trivial(cx)
    assert D2 == []
    assert D1 == [[0]]


@pytest.mark.parametrize("k", KS_NONZERO)
def test_augmented_boundaries(k):
    cx = build_complex(k)
    D2, D1 = foxchain.tensor_trivial(cx)
    assert D2 == [[0, 1 - k]]
    assert D1 == [[0], [0]]


def test_tensor_trivial_mod2():
    D2, _ = foxchain.tensor_trivial(build_complex(4), modulus=2)
    assert D2 == [[0, 1]]
    D2, _ = foxchain.tensor_trivial(build_complex(3), modulus=2)
    assert D2 == [[0, 0]]


def test_complex_json_shape():
    doc = build_complex(2).to_json()
    assert doc["k"] == 2
    assert doc["ranks"] == [1, 2, 1]
    assert len(doc["d2"]) == 1 and len(doc["d2"][0]) == 2
    assert len(doc["d1"]) == 2 and len(doc["d1"][0]) == 1
    assert GroupRingElt.from_json(doc["d1"][0][0]).k == 2
