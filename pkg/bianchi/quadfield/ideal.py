"""本模块定义了整数环 O_K 的整理想

理想以 Hermite 标准形 (a, b, c) 表示，即 Z-基 {a, b + cω}，满足 c | a、c | b、0 ≤ b < a。
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import Any, Self

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from bianchi.exception import FieldError, IdealError

from .field import QuadField, QuadInt


@dataclass(frozen=True, slots=True, order=False)
class QuadIdeal:
    """整理想 Za + Z(b + cω)"""

    field: QuadField
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a <= 0 or self.c <= 0:
            raise IdealError(f"不允许零理想或非标准形: {(self.a, self.b, self.c)}")
        if self.a % self.c or self.b % self.c or not 0 <= self.b < self.a:
            raise IdealError(f"{(self.a, self.b, self.c)} 不是 Hermite 标准形")
        t, n = self.field.t, self.field.n
        a, b, c = self.a, self.b, self.c
        if (c * n + b * (b + c * t) // c) % a:
            raise IdealError(f"{(a, b, c)} 对 ω 的乘法不封闭")

    # ========== 构造 ==========

    @classmethod
    def from_lattice(cls, field: QuadField, vectors: Iterable[QuadInt | int]) -> Self:
        """由 Z-生成元张成的格构造理想，格必须对 ω 封闭"""
        columns = [v if isinstance(v, QuadInt) else QuadInt(field, v) for v in vectors]
        columns = [v for v in columns if not v.is_zero()]
        if not columns:
            raise IdealError("不允许零理想")
        matrix = DomainMatrix(
            [[ZZ(v.x) for v in columns], [ZZ(v.y) for v in columns]],
            (2, len(columns)),
            ZZ,
        )
        hnf = hermite_normal_form(matrix).to_Matrix()
        if hnf.shape != (2, 2):
            raise IdealError("生成元张成的格秩不为 2")
        return cls(field, int(hnf[0, 0]), int(hnf[0, 1]), int(hnf[1, 1]))

    @classmethod
    def generated_by(cls, field: QuadField, *generators: QuadInt | int) -> Self:
        """由 O_K-生成元构造理想"""
        vectors: list[QuadInt] = []
        for g in generators:
            g = g if isinstance(g, QuadInt) else QuadInt(field, g)
            vectors.extend((g, g * field.omega))
        return cls.from_lattice(field, vectors)

    @classmethod
    def unit(cls, field: QuadField) -> Self:
        """单位理想 (1)"""
        return cls(field, 1, 0, 1)

    @classmethod
    def up_to(cls, field: QuadField, bound: int) -> list[Self]:
        """范数不超过 bound 的全部整理想，按 (范数, a, b, c) 排序"""
        t, n = field.t, field.n
        ideals = []
        for norm in range(1, bound + 1):
            for c in range(1, norm + 1):
                if norm % c:
                    continue
                a = norm // c
                if a % c:
                    continue
                for b in range(0, a, c):
                    if (c * n + b * (b + c * t) // c) % a == 0:
                        ideals.append(cls(field, a, b, c))
        return sorted(ideals, key=lambda i: i.sort_key)

    # ========== 基本性质 ==========

    @property
    def norm(self) -> int:
        return self.a * self.c

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.norm, self.a, self.b, self.c)

    def basis(self) -> tuple[QuadInt, QuadInt]:
        return QuadInt(self.field, self.a), QuadInt(self.field, self.b, self.c)

    def is_unit(self) -> bool:
        return self.a == 1

    def __contains__(self, element: QuadInt | int) -> bool:
        if isinstance(element, int):
            element = QuadInt(self.field, element)
        if element.y % self.c:
            return False
        return (element.x - element.y // self.c * self.b) % self.a == 0

    def reduce(self, element: QuadInt | int) -> QuadInt:
        """element 模理想的标准代表元 x + yω，0 ≤ x < a，0 ≤ y < c"""
        if isinstance(element, int):
            element = QuadInt(self.field, element)
        k, y = divmod(element.y, self.c)
        x = (element.x - k * self.b) % self.a
        return QuadInt(self.field, x, y)

    def residues(self) -> Iterator[QuadInt]:
        """O_K / I 的全部标准代表元"""
        for y in range(self.c):
            for x in range(self.a):
                yield QuadInt(self.field, x, y)

    # ========== 运算 ==========

    def _check(self, other: "QuadIdeal") -> None:
        if other.field != self.field:
            raise FieldError(f"{self.field} 与 {other.field} 中的理想无法运算")

    def __mul__(self, other: "QuadIdeal") -> "QuadIdeal":
        self._check(other)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        products = [u * v for u in self.basis() for v in other.basis()]
        return QuadIdeal.from_lattice(self.field, products)

    def __pow__(self, exponent: int) -> "QuadIdeal":
        result = QuadIdeal.unit(self.field)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, m: int) -> "QuadIdeal":
        """主理想 (m) 与本理想的乘积"""
        return QuadIdeal(self.field, self.a * abs(m), self.b * abs(m), self.c * abs(m))

    def conj(self) -> "QuadIdeal":
        return QuadIdeal.from_lattice(self.field, [u.conj() for u in self.basis()])

    def __add__(self, other: "QuadIdeal") -> "QuadIdeal":
        """理想的和，即最大公因子"""
        self._check(other)
        return QuadIdeal.from_lattice(self.field, [*self.basis(), *other.basis()])

    gcd = __add__

    def divides(self, other: "QuadIdeal") -> bool:
        """self | other，即 other ⊆ self"""
        return all(u in self for u in other.basis())

    def is_coprime(self, other: "QuadIdeal") -> bool:
        return (self + other).is_unit()

    def __truediv__(self, other: "QuadIdeal") -> "QuadIdeal":
        """精确除法 self / other = self·other̄ / N(other)"""
        self._check(other)
        if not other.divides(self):
            raise IdealError(f"{other} 不整除 {self}")
        product = self * other.conj()
        m = other.norm
        return QuadIdeal(self.field, product.a // m, product.b // m, product.c // m)

    def lcm(self, other: "QuadIdeal") -> "QuadIdeal":
        """最小公倍，(I ∩ J)(I + J) = IJ"""
        return (self * other) / (self + other)

    def __lt__(self, other: "QuadIdeal") -> bool:
        return self.sort_key < other.sort_key

    # ========== 序列化 ==========

    def to_json(self) -> dict[str, Any]:
        return {"a": self.a, "b": self.b, "c": self.c, "field_d": self.field.d}

    @classmethod
    def from_json(cls, data: dict[str, Any], field: QuadField | None = None) -> Self:
        field = field or QuadField(int(data["field_d"]))
        return cls(field, int(data["a"]), int(data["b"]), int(data["c"]))

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"

    @classmethod
    def parse(cls, field: QuadField, text: str) -> Self:
        """解析 `[a,b,c]` 或 `a,b,c` 形式的 Hermite 标准形"""
        body = text.strip().removeprefix("[").removesuffix("]")
        try:
            a, b, c = (int(part) for part in body.split(","))
        except ValueError as e:
            raise IdealError(f"无法解析理想: {text!r}") from e
        return cls(field, a, b, c)
