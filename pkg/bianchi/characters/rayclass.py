"""本模块实现了类数为 1 时的射线类群 Cl_K(f) ≅ (O_K/f)^× / O_K^×"""

from fractions import Fraction
from typing import Any

from bianchi.exception import CoprimalityError, UnsupportedFieldError
from bianchi.quadfield import QuadField, QuadIdeal, QuadInt, canonical_generator, prime_ideals

from .residue import Exponents, ResidueGroup, residue_group

SCAN_START = 64
"""扫描代表素理想时的初始范数上限"""


class RayClassGroup:
    """射线类群 Cl_K(f)

    每个类以其陪集中字典序最小的指数向量为标识，代表元是该类中范数最小的素理想。
    """

    __slots__ = ("field", "modulus", "group", "units", "representatives", "_index")

    field: QuadField
    modulus: QuadIdeal
    """模 f"""
    group: ResidueGroup
    """(O_K/f)^×"""
    units: tuple[QuadInt, ...]
    """单位群在 (O_K/f)^× 中的像"""
    representatives: tuple[QuadIdeal, ...]
    """各类的代表素理想"""

    def __init__(self, field: QuadField, modulus: QuadIdeal) -> None:
        if not field.class_number_one:
            raise UnsupportedFieldError(f"{field} 的类数不为 1，不支持射线类群")
        self.field = field
        self.modulus = modulus
        self.group = residue_group(modulus)
        self.units = tuple(sorted(
            {modulus.reduce(u) for u in field.units()}, key=lambda x: (x.y, x.x)
        ))

        size = self.size
        index: dict[Exponents, int] = {}
        representatives: list[QuadIdeal] = []
        bound = SCAN_START
        while len(index) < size:
            for q in prime_ideals(field, bound):
                if not q.is_coprime(modulus):
                    continue
                key = self._key(canonical_generator(q))
                if key not in index:
                    index[key] = len(representatives)
                    representatives.append(q)
            bound *= 2
        self.representatives = tuple(representatives)
        self._index = index

    def _key(self, element: QuadInt) -> Exponents:
        return min(self.group.log(element * u) for u in self.units)

    @property
    def size(self) -> int:
        """类的个数 t"""
        return self.group.size // len(self.units)

    def __len__(self) -> int:
        return self.size

    def class_of_element(self, element: QuadInt) -> int:
        if element not in self.group:
            raise CoprimalityError(f"{element} 与 {self.modulus} 不互素")
        return self._index[self._key(element)]

    def class_of(self, ideal: QuadIdeal) -> int:
        """与 f 互素的理想所在类的编号

        ### 异常
            CoprimalityError: 理想与 f 不互素
        """
        if not ideal.is_coprime(self.modulus):
            raise CoprimalityError(f"{ideal} 与 {self.modulus} 不互素")
        return self.class_of_element(canonical_generator(ideal))

    def compose(self, i: int, j: int) -> int:
        """类编号上的群运算"""
        x = canonical_generator(self.representatives[i])
        y = canonical_generator(self.representatives[j])
        return self.class_of_element(x * y)

    def coverage(self, ideals: list[QuadIdeal]) -> Fraction:
        hit = {self.class_of(q) for q in ideals if q.is_coprime(self.modulus)}
        return Fraction(len(hit), self.size)

    def to_json(self) -> dict[str, Any]:
        return {
            "modulus": self.modulus.to_json(),
            "t": self.size,
            "representatives": [q.to_json() for q in self.representatives],
        }


def ray_classes(field: QuadField, modulus: QuadIdeal) -> RayClassGroup:
    """射线类群 Cl_K(f)。

    ### 异常
        UnsupportedFieldError: 类数不为 1

        GroupBoundError: |(O/f)^×| 超出上限
    """
    return RayClassGroup(field, modulus)
