"""本模块定义了权与特征对无穷型的分类"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from bianchi.characters import CharPair, InfinityType
from bianchi.exception import EigensystemError

type PairType = tuple[InfinityType, InfinityType]


@dataclass(frozen=True, slots=True, order=True)
class Weight:
    """系数系统的权 (k, ℓ)"""

    k: int
    ell: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.ell < 0:
            raise EigensystemError(f"权必须非负: ({self.k}, {self.ell})")

    def is_parallel(self) -> bool:
        return self.k == self.ell

    def is_trivial(self) -> bool:
        return self.k == 0 and self.ell == 0

    def to_json(self) -> list[int]:
        return [self.k, self.ell]

    def __str__(self) -> str:
        return f"({self.k},{self.ell})"


class TypeTag(str, Enum):
    """特征对无穷型的类别"""

    TYPE_A = "type_a"
    """[(k+1, 0), (−1, ℓ)]"""
    TYPE_B = "type_b"
    """[(k+1, ℓ+1), (−1, −1)]"""
    TYPE_A_DUAL = "type_a_dual"
    """[(0, ℓ+1), (k, −1)]，TYPE_A 在对合下的像"""
    TYPE_B_DUAL = "type_b_dual"
    """[(0, 0), (k, ℓ)]，TYPE_B 在对合下的像"""
    OTHER = "other"

    @property
    def dual(self) -> "TypeTag":
        return _DUALS.get(self, self)

    @property
    def primary(self) -> "TypeTag":
        """对合轨道中的 TYPE_A 或 TYPE_B 代表"""
        match self:
            case TypeTag.TYPE_A_DUAL | TypeTag.TYPE_B_DUAL:
                return self.dual
            case _:
                return self


_DUALS = {
    TypeTag.TYPE_A: TypeTag.TYPE_A_DUAL,
    TypeTag.TYPE_A_DUAL: TypeTag.TYPE_A,
    TypeTag.TYPE_B: TypeTag.TYPE_B_DUAL,
    TypeTag.TYPE_B_DUAL: TypeTag.TYPE_B,
}


def pair_type(tag: TypeTag, weight: Weight) -> PairType:
    """类别与权对应的无穷型对"""
    k, ell = weight.k, weight.ell
    match tag:
        case TypeTag.TYPE_A:
            return ((k + 1, 0), (-1, ell))
        case TypeTag.TYPE_B:
            return ((k + 1, ell + 1), (-1, -1))
        case TypeTag.TYPE_A_DUAL:
            return ((0, ell + 1), (k, -1))
        case TypeTag.TYPE_B_DUAL:
            return ((0, 0), (k, ell))
        case _:
            raise EigensystemError(f"类别 {tag.value} 没有对应的无穷型")


@dataclass(frozen=True, slots=True)
class InfinityTypeClass:
    """特征对无穷型的分类结果"""

    tag: TypeTag
    weight: Weight | None = None

    @property
    def types(self) -> PairType:
        if self.weight is None:
            raise EigensystemError("类别 other 没有权")
        return pair_type(self.tag, self.weight)

    def to_json(self) -> dict[str, Any]:
        return {
            "tag": self.tag.value,
            "weight": self.weight.to_json() if self.weight else None,
        }


def classify_types(types: PairType) -> InfinityTypeClass:
    (a1, b1), (a2, b2) = types
    if a2 == -1 and a1 >= 1 and b1 == 0 and b2 >= 0:
        return InfinityTypeClass(TypeTag.TYPE_A, Weight(a1 - 1, b2))
    if a2 == -1 and b2 == -1 and a1 >= 1 and b1 >= 1:
        return InfinityTypeClass(TypeTag.TYPE_B, Weight(a1 - 1, b1 - 1))
    if a1 == 0 and b1 >= 1 and a2 >= 0 and b2 == -1:
        return InfinityTypeClass(TypeTag.TYPE_A_DUAL, Weight(a2, b1 - 1))
    if a1 == 0 and b1 == 0 and a2 >= 0 and b2 >= 0:
        return InfinityTypeClass(TypeTag.TYPE_B_DUAL, Weight(a2, b2))
    return InfinityTypeClass(TypeTag.OTHER)


def classify(pair: CharPair) -> InfinityTypeClass:
    """特征对的无穷型分类"""
    return classify_types(pair.infinity_types)


ADMISSIBLE_TAGS = (
    TypeTag.TYPE_A,
    TypeTag.TYPE_B,
    TypeTag.TYPE_A_DUAL,
    TypeTag.TYPE_B_DUAL,
)
"""恢复搜索中允许的全部类别"""
