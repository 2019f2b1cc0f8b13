from fractions import Fraction

import mpmath
import pytest

from bianchi.arith import CycloNum, cyclo_arith
from bianchi.exception import DivisionByZeroError, OrderOverflowError, PrecisionError

from .helpers import PROPERTY_CASES

ORDERS = (1, 3, 4, 6, 8, 12)


def random_cyclo(rng, orders=ORDERS) -> CycloNum:
    order = rng.choice(orders)
    return CycloNum(order, [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(order)])


def test_root_of_unity_square(zeta4):
    assert zeta4 * zeta4 == -1
    assert cyclo_arith(zeta4, zeta4, "mul") == CycloNum.rational(-1)


def test_conj_of_zeta4(zeta4):
    assert zeta4.conj() == CycloNum.root_of_unity(4, 3)
    assert cyclo_arith(zeta4, None, "conj") == -zeta4


def test_inverse_of_one_plus_zeta3():
    zeta3 = CycloNum.root_of_unity(3)
    assert (1 + zeta3).inv() == -zeta3
    assert cyclo_arith(1 + zeta3, None, "inv") == -zeta3


def test_embed_zeta3():
    re, im = CycloNum.root_of_unity(3).embed_complex(10)
    assert abs(re + mpmath.mpf("0.5")) < mpmath.mpf("1e-10")
    assert abs(im - mpmath.sqrt(3) / 2) < mpmath.mpf("1e-10")


@pytest.mark.parametrize("digits", [0, 61])
def test_embed_precision_bounds(digits):
    with pytest.raises(PrecisionError):
        CycloNum.one().embed_complex(digits)


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        CycloNum.zero(4).inv()
    with pytest.raises(DivisionByZeroError):
        CycloNum.one(4) / 0


def test_order_overflow():
    with pytest.raises(OrderOverflowError):
        CycloNum.root_of_unity(10**4 + 1)


def test_cross_order_equality():
    # ζ₄ 在 Q(ζ₈) 中是 ζ₈²
    assert CycloNum.root_of_unity(4) == CycloNum.root_of_unity(8, 2)
    assert CycloNum.root_of_unity(3) != CycloNum.root_of_unity(6)
    assert CycloNum.root_of_unity(6, 3) == -1
    assert CycloNum.rational(Fraction(1, 2), 12) == Fraction(1, 2)


def test_coerce_requires_multiple():
    with pytest.raises(ValueError):
        CycloNum.root_of_unity(4).coerce(6)


def test_from_angle_and_root_angle():
    z = CycloNum.from_angle(Fraction(5, 12))
    assert z == CycloNum.root_of_unity(12, 5)
    assert z.root_angle() == Fraction(5, 12)
    assert (1 + CycloNum.root_of_unity(4)).root_angle() is None


def test_parse_and_str(zeta4):
    assert CycloNum.parse("4:0,1") == zeta4
    assert str(-zeta4) == "4:0,-1"
    assert CycloNum.parse(str(2 - 3 * zeta4)) == 2 - 3 * zeta4


def test_json_roundtrip(rng):
    x = random_cyclo(rng)
    assert CycloNum.from_json(x.to_json()) == x


def test_field_axioms(rng):
    for _ in range(PROPERTY_CASES):
        x, y, z = (random_cyclo(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        if not x.is_zero():
            assert x * x.inv() == 1


def test_conj_is_ring_homomorphism(rng):
    for _ in range(200):
        x, y = random_cyclo(rng), random_cyclo(rng)
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()
        assert x.conj().conj() == x


def test_coerce_preserves_value(rng):
    for _ in range(100):
        x = random_cyclo(rng, (3, 4, 5))
        lifted = x.coerce(x.order * 4)
        assert lifted == x
        assert lifted.order == x.order * 4


def test_embedding_is_multiplicative(rng):
    for _ in range(50):
        x, y = random_cyclo(rng), random_cyclo(rng)
        a, b = mpmath.mpc(*x.embed_complex(20)), mpmath.mpc(*y.embed_complex(20))
        c = mpmath.mpc(*(x * y).embed_complex(20))
        assert abs(a * b - c) < mpmath.mpf("1e-12") * (1 + abs(c))


def test_power(zeta4):
    assert zeta4**4 == 1
    assert zeta4**-1 == zeta4.conj()
    assert (1 + zeta4) ** 2 == 2 * zeta4
