"""本模块实现了分圆域 Q(ζ_n) 上的精确算术

元素以幂基 1, ζ, …, ζ^{φ(n)−1} 下的有理坐标表示，并始终按第 n 个分圆多项式约化，
因此相等判断只需比较坐标。
"""

from collections.abc import Iterable
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Any, Literal, Self, overload

import mpmath
from sympy import QQ, Poly, Symbol, cyclotomic_poly, mobius, totient
from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.euclidtools import dup_invert

from bianchi.config import arith_config
from bianchi.exception import DivisionByZeroError, OrderOverflowError, PrecisionError

type Rational = Fraction | int
type CycloOp = Literal["add", "mul", "inv", "conj", "eq"]

_x = Symbol("x")


@lru_cache(maxsize=256)
def cyclotomic_modulus(order: int) -> tuple[Any, ...]:
    """第 order 个分圆多项式的稠密系数（高次在前，QQ 元素）"""
    coeffs = Poly(cyclotomic_poly(order, _x), _x).all_coeffs()
    return tuple(QQ(int(c)) for c in coeffs)


@lru_cache(maxsize=256)
def cyclotomic_degree(order: int) -> int:
    return int(totient(order))


@lru_cache(maxsize=256)
def _trace_weights(order: int) -> tuple[Fraction, ...]:
    # Tr(ζ^j)/φ(n) = μ(n/g)/φ(n/g)，g = gcd(n, j)
    weights = []
    for j in range(cyclotomic_degree(order)):
        m = order // gcd(order, j)
        weights.append(Fraction(int(mobius(m)), int(totient(m))))
    return tuple(weights)


def _to_dup(coeffs: Iterable[Fraction]) -> list[Any]:
    dup = [QQ(c.numerator, c.denominator) for c in reversed(list(coeffs))]
    while dup and not dup[0]:
        dup.pop(0)
    return dup


def _dup_to_coeffs(dup: list[Any], degree: int) -> tuple[Fraction, ...]:
    coeffs = [
        Fraction(int(QQ.numer(c)), int(QQ.denom(c))) for c in reversed(dup)
    ]
    coeffs.extend([Fraction(0)] * (degree - len(coeffs)))
    return tuple(coeffs)


def _check_order(order: int) -> None:
    if order < 1:
        raise ValueError(f"分圆域的阶必须为正整数: {order}")
    if order > arith_config.max_cyclo_order:
        raise OrderOverflowError(
            f"分圆域的阶 {order} 超出上限 {arith_config.max_cyclo_order}"
        )


class CycloNum:
    """分圆域 Q(ζ_n) 中的元素"""

    __slots__ = ("order", "coeffs")

    order: int
    """分圆域的阶 n"""
    coeffs: tuple[Fraction, ...]
    """幂基下的坐标，长度为 φ(n)"""

    def __init__(self, order: int, coeffs: Iterable[Rational] = ()) -> None:
        _check_order(order)
        degree = cyclotomic_degree(order)
        values = [Fraction(c) for c in coeffs]
        if len(values) > degree:
            dup = dup_rem(_to_dup(values), list(cyclotomic_modulus(order)), QQ)
            values = list(_dup_to_coeffs(dup, degree))
        values.extend([Fraction(0)] * (degree - len(values)))
        self.order = order
        self.coeffs = tuple(values)

    @classmethod
    def _from_dup(cls, order: int, dup: list[Any]) -> Self:
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = _dup_to_coeffs(dup, cyclotomic_degree(order))
        return obj

    # ========== 构造 ==========

    @classmethod
    def zero(cls, order: int = 1) -> Self:
        return cls(order)

    @classmethod
    def one(cls, order: int = 1) -> Self:
        return cls(order, [1])

    @classmethod
    def rational(cls, value: Rational, order: int = 1) -> Self:
        """有理数嵌入 Q(ζ_order)"""
        return cls(order, [value])

    @classmethod
    def root_of_unity(cls, order: int, exponent: int = 1) -> Self:
        """单位根 ζ_order^exponent"""
        _check_order(order)
        exponent %= order
        dup = [QQ(1)] + [QQ(0)] * exponent
        return cls._from_dup(order, dup_rem(dup, list(cyclotomic_modulus(order)), QQ))

    @classmethod
    def from_angle(cls, angle: Fraction) -> Self:
        """由 Q/Z 中的角度 t 构造 exp(2πi·t)"""
        angle %= 1
        return cls.root_of_unity(angle.denominator, angle.numerator)

    # ========== 基本性质 ==========

    @property
    def degree(self) -> int:
        """[Q(ζ_n):Q]"""
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def root_angle(self) -> Fraction | None:
        """元素为单位根 exp(2πi·t) 时返回 t ∈ [0, 1)，否则返回 None"""
        order = self.order if self.order % 2 == 0 else 2 * self.order
        value = self.coerce(order)
        for j in range(order):
            if value.coeffs == type(self).root_of_unity(order, j).coeffs:
                return Fraction(j, order)
        return None

    def normalized_trace(self) -> Fraction:
        """Tr(x)/[Q(ζ_n):Q]，与所在分圆域的阶无关"""
        weights = _trace_weights(self.order)
        return sum((c * w for c, w in zip(self.coeffs, weights)), Fraction(0))

    # ========== 换阶 ==========

    def coerce(self, order: int) -> Self:
        """把元素提升到 Q(ζ_order)，order 必须是当前阶的倍数"""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"无法把 Q(ζ_{self.order}) 的元素提升到 Q(ζ_{order})")
        _check_order(order)
        step = order // self.order
        low_first: list[Fraction] = [Fraction(0)] * ((self.degree - 1) * step + 1)
        for j, c in enumerate(self.coeffs):
            low_first[j * step] = c
        dup = dup_rem(_to_dup(low_first), list(cyclotomic_modulus(order)), QQ)
        return type(self)._from_dup(order, dup)

    def _unify(self, other: "CycloNum | Rational") -> tuple[Self, Self]:
        if not isinstance(other, CycloNum):
            other = type(self).rational(other, self.order)
        order = lcm(self.order, other.order)
        return self.coerce(order), other.coerce(order)

    # ========== 运算 ==========

    def __add__(self, other: "CycloNum | Rational") -> Self:
        x, y = self._unify(other)
        return type(self)._from_dup(
            x.order, dup_add(_to_dup(x.coeffs), _to_dup(y.coeffs), QQ)
        )

    __radd__ = __add__

    def __neg__(self) -> Self:
        return type(self)._from_dup(self.order, dup_neg(_to_dup(self.coeffs), QQ))

    def __sub__(self, other: "CycloNum | Rational") -> Self:
        x, y = self._unify(other)
        return type(self)._from_dup(
            x.order, dup_sub(_to_dup(x.coeffs), _to_dup(y.coeffs), QQ)
        )

    def __rsub__(self, other: Rational) -> Self:
        return (-self) + other

    def __mul__(self, other: "CycloNum | Rational") -> Self:
        if not isinstance(other, CycloNum):
            scale = Fraction(other)
            obj = type(self).__new__(type(self))
            obj.order = self.order
            obj.coeffs = tuple(c * scale for c in self.coeffs)
            return obj
        x, y = self._unify(other)
        modulus = list(cyclotomic_modulus(x.order))
        product = dup_mul(_to_dup(x.coeffs), _to_dup(y.coeffs), QQ)
        return type(self)._from_dup(x.order, dup_rem(product, modulus, QQ))

    __rmul__ = __mul__

    def inv(self) -> Self:
        """乘法逆元"""
        if self.is_zero():
            raise DivisionByZeroError("分圆数 0 没有逆元")
        modulus = list(cyclotomic_modulus(self.order))
        return type(self)._from_dup(
            self.order, dup_invert(_to_dup(self.coeffs), modulus, QQ)
        )

    def __truediv__(self, other: "CycloNum | Rational") -> Self:
        if not isinstance(other, CycloNum):
            if other == 0:
                raise DivisionByZeroError("除数为 0")
            return self * (1 / Fraction(other))
        return self * other.inv()

    def __rtruediv__(self, other: Rational) -> Self:
        return self.inv() * other

    def __pow__(self, exponent: int) -> Self:
        base = self if exponent >= 0 else self.inv()
        result = type(self).one(self.order)
        power = base
        n = abs(exponent)
        while n:
            if n & 1:
                result = result * power
            power = power * power
            n >>= 1
        return result

    def conj(self) -> Self:
        """复共轭 ζ ↦ ζ^{−1}"""
        n = self.order
        result = [Fraction(0)] * n
        for j, c in enumerate(self.coeffs):
            if c:
                result[(-j) % n] += c
        return type(self)(n, result)

    # ========== 比较 ==========

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        x, y = self._unify(other)
        return x.coeffs == y.coeffs

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    def __bool__(self) -> bool:
        return not self.is_zero()

    # ========== 嵌入与序列化 ==========

    def embed_complex(self, digits: int = 15) -> tuple[mpmath.mpf, mpmath.mpf]:
        """在 C 中的取值，ζ_n ↦ exp(2πi/n)。

        ### 参数
            digits: 十进制精度，误差小于 10^{−digits}

        ### 异常
            PrecisionError: 精度超过配置上限
        """
        if digits < 1 or digits > arith_config.max_digits:
            raise PrecisionError(
                f"请求的精度 {digits} 不在 1..{arith_config.max_digits} 内"
            )
        with mpmath.workdps(digits + 10):
            total = mpmath.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    angle = mpmath.mpf(2 * j) / self.order
                    total += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(angle)
            return (+total.real, +total.imag)

    def to_json(self) -> dict[str, Any]:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        return cls(int(data["order"]), [Fraction(c) for c in data["coeffs"]])

    def __str__(self) -> str:
        return f"{self.order}:" + ",".join(str(c) for c in self.coeffs)

    @classmethod
    def parse(cls, text: str) -> Self:
        """解析 `order:c0,c1,…` 形式的字符串"""
        order, _, body = text.strip().partition(":")
        coeffs = [Fraction(c) for c in body.split(",") if c.strip()]
        return cls(int(order), coeffs)

    def __repr__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            match j:
                case 0:
                    terms.append(f"{c}")
                case 1:
                    terms.append(f"{c}*ζ{self.order}")
                case _:
                    terms.append(f"{c}*ζ{self.order}^{j}")
        return f"CycloNum({' + '.join(terms) or '0'})"


@overload
def cyclo_arith(x: CycloNum, y: CycloNum | None, op: Literal["eq"]) -> bool: ...


@overload
def cyclo_arith(
    x: CycloNum, y: CycloNum | None, op: Literal["add", "mul", "inv", "conj"]
) -> CycloNum: ...


def cyclo_arith(x: CycloNum, y: CycloNum | None, op: CycloOp) -> CycloNum | bool:
    """分圆数的基本运算。

    ### 参数
        x: 左操作数

        y: 右操作数，`inv` 与 `conj` 时忽略

        op: 运算名称
    """
    match op:
        case "add" if y is not None:
            return x + y
        case "mul" if y is not None:
            return x * y
        case "eq" if y is not None:
            return x == y
        case "inv":
            return x.inv()
        case "conj":
            return x.conj()
        case _:
            raise ValueError(f"运算 {op} 缺少操作数或不受支持")
