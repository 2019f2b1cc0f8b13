"""本模块实现了非分歧扩张 Z_p[x]/(g) 中的 p 进数

元素写作 p^shift·Σ c_j x^j，系数在模 p^precision 下给出，g 是首一多项式且模 p 不可约，
因此 1, x, …, x^{f−1} 是整基，赋值等于 shift 加上系数赋值的最小值。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Self

from sympy import multiplicity

from bianchi.exception import InfiniteValuationError, PadicError


@dataclass(frozen=True, slots=True, order=True)
class Valuation:
    """p 进赋值，精度不足时只给出下界"""

    value: Fraction
    exact: bool = True

    def at_least(self, bound: int | Fraction) -> bool:
        return self.value >= bound

    def to_json(self) -> str:
        return str(self)

    def __str__(self) -> str:
        return str(self.value) if self.exact else f"≥{self.value}"


def _reduce(poly: list[int], modulus: tuple[int, ...], mod: int) -> list[int]:
    # 对首一多项式 g（低次在前）取余，再模 mod
    degree = len(modulus) - 1
    poly = [c % mod for c in poly]
    for i in range(len(poly) - 1, degree - 1, -1):
        c = poly[i]
        if not c:
            continue
        for j in range(degree + 1):
            poly[i - degree + j] = (poly[i - degree + j] - c * modulus[j]) % mod
    poly = poly[:degree]
    poly.extend([0] * (degree - len(poly)))
    return poly


def _vp(value: int, p: int) -> int:
    return int(multiplicity(p, value))


@dataclass(frozen=True, slots=True)
class PadicNum:
    """非分歧扩张中的 p 进数"""

    p: int
    modulus: tuple[int, ...]
    """首一多项式 g 的系数（低次在前），模 p^N 给出"""
    shift: int
    coeffs: tuple[int, ...]
    """0 ≤ c_j < p^precision"""
    precision: int
    """相对精度，系数只在模 p^precision 下有意义"""

    @property
    def unram_degree(self) -> int:
        return len(self.modulus) - 1

    @classmethod
    def make(
        cls,
        p: int,
        modulus: tuple[int, ...],
        shift: int,
        coeffs: list[int],
        precision: int,
    ) -> Self:
        """约化并把系数中的公共 p 幂移入 shift"""
        if precision <= 0:
            return cls(p, modulus, shift, (0,) * (len(modulus) - 1), 0)
        mod = p**precision
        coeffs = _reduce(coeffs, modulus, mod)
        nonzero = [c for c in coeffs if c]
        if not nonzero:
            return cls(p, modulus, shift, tuple(coeffs), precision)
        t = min(_vp(c, p) for c in nonzero)
        if t:
            scale = p**t
            coeffs = [c // scale for c in coeffs]
        return cls(p, modulus, shift + t, tuple(coeffs), precision - t)

    @classmethod
    def from_rationals(
        cls, p: int, modulus: tuple[int, ...], values: list[Fraction], precision: int
    ) -> Self:
        """Σ values[j]·x^j 的像"""
        nonzero = [v for v in values if v]
        if not nonzero:
            raise InfiniteValuationError("0 的赋值为无穷")
        shift = min(_vp(v.numerator, p) - _vp(v.denominator, p) for v in nonzero)
        mod = p**precision
        coeffs = []
        for v in values:
            if not v:
                coeffs.append(0)
                continue
            scaled = v / Fraction(p) ** shift
            coeffs.append(scaled.numerator * pow(scaled.denominator, -1, mod) % mod)
        return cls.make(p, modulus, shift, coeffs, precision)

    # ========== 运算 ==========

    def _check(self, other: "PadicNum") -> None:
        if self.p != other.p or self.modulus != other.modulus:
            raise PadicError("不同嵌入下的 p 进数无法运算")

    def is_zero(self) -> bool:
        """在给定精度下为 0"""
        return not any(self.coeffs)

    def __add__(self, other: "PadicNum") -> "PadicNum":
        self._check(other)
        shift = min(self.shift, other.shift)
        precision = min(self.shift + self.precision, other.shift + other.precision) - shift
        if precision <= 0:
            return PadicNum.make(self.p, self.modulus, shift, [], 0)
        mod = self.p**precision
        x = self.p ** (self.shift - shift)
        y = self.p ** (other.shift - shift)
        coeffs = [(a * x + b * y) % mod for a, b in zip(self.coeffs, other.coeffs)]
        return PadicNum.make(self.p, self.modulus, shift, coeffs, precision)

    def __neg__(self) -> "PadicNum":
        mod = self.p**self.precision
        return PadicNum(
            self.p, self.modulus, self.shift, tuple(-c % mod for c in self.coeffs), self.precision
        )

    def __sub__(self, other: "PadicNum") -> "PadicNum":
        return self + (-other)

    def __mul__(self, other: "PadicNum") -> "PadicNum":
        self._check(other)
        precision = min(self.precision, other.precision)
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return PadicNum.make(
            self.p, self.modulus, self.shift + other.shift, product, precision
        )

    # ========== 赋值 ==========

    def valuation(self) -> Valuation:
        """v_p，v_p(p) = 1；精度内为 0 时返回下界"""
        if self.is_zero():
            return Valuation(Fraction(self.shift + self.precision), exact=False)
        return Valuation(
            Fraction(self.shift + min(_vp(c, self.p) for c in self.coeffs if c))
        )

    def is_unit(self) -> bool:
        v = self.valuation()
        return v.exact and v.value == 0

    def to_json(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "shift": self.shift,
            "coeffs": list(self.coeffs),
            "precision": self.precision,
        }

    def __str__(self) -> str:
        body = " + ".join(f"{c}·x^{j}" for j, c in enumerate(self.coeffs) if c) or "0"
        return f"{self.p}^{self.shift}·({body}) + O({self.p}^{self.shift + self.precision})"
