"""本模块定义了虚二次域 K = Q(√d) 及其整数环中的元素"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Self

from sympy import factorint
from sympy.ntheory import jacobi_symbol

from bianchi.arith import CycloNum
from bianchi.exception import FieldError

CLASS_NUMBER_ONE = frozenset({-1, -2, -3, -7, -11, -19, -43, -67, -163})
"""类数为 1 的虚二次域对应的 d"""


def kronecker(m: int, n: int) -> int:
    """Kronecker 符号 (m/n)，n > 0"""
    if n <= 0:
        raise ValueError(f"Kronecker 符号要求 n > 0: {n}")
    result = 1
    while n % 2 == 0:
        n //= 2
        if m % 2 == 0:
            return 0
        if m % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * jacobi_symbol(m % n, n)


@dataclass(frozen=True, slots=True)
class QuadField:
    """虚二次域 K = Q(√d)，d < 0 且无平方因子

    整数环 O_K = Z[ω]，ω² = tω − n。
    """

    d: int
    """无平方因子的负整数"""
    t: int = field(init=False, repr=False, compare=False)
    """ω 的迹"""
    n: int = field(init=False, repr=False, compare=False)
    """ω 的范数"""
    D: int = field(init=False, repr=False, compare=False)
    """判别式的绝对值，判别式为 −D"""
    w: int = field(init=False, repr=False, compare=False)
    """单位群的阶"""

    def __post_init__(self) -> None:
        if self.d >= 0:
            raise FieldError(f"d 必须为负数: {self.d}")
        if any(e > 1 for e in factorint(-self.d).values()):
            raise FieldError(f"d={self.d} 不是无平方因子数")
        if self.d % 4 == 1:
            t, n, D = 1, (1 - self.d) // 4, -self.d
        else:
            t, n, D = 0, -self.d, -4 * self.d
        w = {-1: 4, -3: 6}.get(self.d, 2)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "w", w)

    @property
    def discriminant(self) -> int:
        return -self.D

    @property
    def class_number_one(self) -> bool:
        return self.d in CLASS_NUMBER_ONE

    @property
    def omega(self) -> "QuadInt":
        return QuadInt(self, 0, 1)

    def element(self, x: int, y: int = 0) -> "QuadInt":
        return QuadInt(self, x, y)

    @property
    def unit_generator(self) -> "QuadInt":
        """单位群的生成元：Q(i) 中为 i，Q(√−3) 中为 ζ₆，其余为 −1"""
        return self.omega if self.w > 2 else QuadInt(self, -1, 0)  # noqa: PLR2004

    def units(self) -> tuple["QuadInt", ...]:
        """全部单位 u₀^j，0 ≤ j < w"""
        units = [QuadInt(self, 1, 0)]
        for _ in range(self.w - 1):
            units.append(units[-1] * self.unit_generator)
        return tuple(units)

    def kronecker(self, ell: int) -> int:
        """判别式在 ℓ 处的 Kronecker 符号"""
        return kronecker(self.discriminant, ell)

    @property
    def value_order(self) -> int:
        """K 在 Q(ζ_D) 中的分圆阶"""
        return self.D

    def to_json(self) -> dict[str, Any]:
        return {"d": self.d, "discriminant": self.discriminant, "w": self.w}

    def __str__(self) -> str:
        return f"Q(√{self.d})"


@lru_cache(maxsize=32)
def omega_cyclo(field: QuadField) -> CycloNum:
    """ω 在 Q(ζ_D) 中的像，√d 取上半平面

    √−D 由 Gauss 和 Σ (−D/a) ζ_D^a 给出，其值为 i√D。
    """
    order = field.D
    coeffs = [Fraction(0)] * order
    for a in range(1, order):
        coeffs[a] = Fraction(kronecker(field.discriminant, a))
    delta = CycloNum(order, coeffs)
    if field.t:
        return (delta + 1) / 2
    return delta / 2


@dataclass(frozen=True, slots=True)
class QuadInt:
    """整数环 O_K 中的元素 x + yω"""

    field: QuadField
    x: int
    y: int = 0

    def _coerce(self, other: "QuadInt | int") -> "QuadInt":
        if isinstance(other, int):
            return QuadInt(self.field, other, 0)
        if other.field != self.field:
            raise FieldError(f"{self.field} 与 {other.field} 中的元素无法运算")
        return other

    def __add__(self, other: "QuadInt | int") -> "QuadInt":
        other = self._coerce(other)
        return QuadInt(self.field, self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.field, -self.x, -self.y)

    def __sub__(self, other: "QuadInt | int") -> "QuadInt":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "QuadInt":
        return (-self) + other

    def __mul__(self, other: "QuadInt | int") -> "QuadInt":
        other = self._coerce(other)
        t, n = self.field.t, self.field.n
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        return QuadInt(
            self.field,
            x1 * x2 - n * y1 * y2,
            x1 * y2 + x2 * y1 + t * y1 * y2,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QuadInt":
        if exponent < 0:
            raise ValueError("O_K 中的元素只能取非负整数次幂")
        result = QuadInt(self.field, 1, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "QuadInt":
        """共轭 x + yω ↦ (x + ty) − yω"""
        return QuadInt(self.field, self.x + self.field.t * self.y, -self.y)

    def norm(self) -> int:
        t, n = self.field.t, self.field.n
        return self.x * self.x + t * self.x * self.y + n * self.y * self.y

    def trace(self) -> int:
        return 2 * self.x + self.field.t * self.y

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def to_cyclo(self) -> CycloNum:
        """在 Q(ζ_D) 中的像"""
        order = self.field.value_order
        return CycloNum.rational(self.x, order) + omega_cyclo(self.field) * self.y

    def to_json(self) -> list[int]:
        return [self.x, self.y]

    @classmethod
    def from_json(cls, field: QuadField, data: list[int]) -> Self:
        return cls(field, int(data[0]), int(data[1]))

    def __str__(self) -> str:
        symbol = "i" if self.field.d == -1 else "ω"
        if self.y == 0:
            return str(self.x)
        y = {1: "", -1: "-"}.get(self.y, str(self.y))
        if self.x == 0:
            return f"{y}{symbol}"
        sign = "+" if self.y > 0 else ""
        return f"{self.x}{sign}{y}{symbol}"
