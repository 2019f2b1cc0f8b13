"""本模块定义了导子互素的 Hecke 特征对 φ = (φ₁, φ₂)"""

from dataclasses import dataclass
from typing import Any, Self

from bianchi.exception import CoprimalityError, FieldError
from bianchi.quadfield import QuadField, QuadIdeal

from .hecke import HeckeChar, InfinityType


@dataclass(frozen=True, slots=True)
class CharPair:
    """Hecke 特征对，两个特征在构造时化为本原形式"""

    phi1: HeckeChar
    phi2: HeckeChar

    def __post_init__(self) -> None:
        if self.phi1.field != self.phi2.field:
            raise FieldError(f"{self.phi1.field} 与 {self.phi2.field} 上的特征不能配对")
        object.__setattr__(self, "phi1", self.phi1.primitive())
        object.__setattr__(self, "phi2", self.phi2.primitive())
        n1, n2 = self.phi1.conductor, self.phi2.conductor
        if not n1.is_coprime(n2):
            raise CoprimalityError(f"导子 {n1} 与 {n2} 不互素")

    @property
    def field(self) -> QuadField:
        return self.phi1.field

    @property
    def n1(self) -> QuadIdeal:
        return self.phi1.conductor

    @property
    def n2(self) -> QuadIdeal:
        return self.phi2.conductor

    @property
    def level(self) -> QuadIdeal:
        """n = n₁·n₂"""
        return self.n1 * self.n2

    @property
    def infinity_types(self) -> tuple[InfinityType, InfinityType]:
        return self.phi1.infinity_type, self.phi2.infinity_type

    @property
    def sort_key(self) -> tuple[Any, ...]:
        return (self.phi1.sort_key, self.phi2.sort_key)

    def to_json(self) -> dict[str, Any]:
        return {
            "phi1": self.phi1.to_json(),
            "phi2": self.phi2.to_json(),
            "level": self.level.to_json(),
            "infinity_types": [list(t) for t in self.infinity_types],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        return cls(HeckeChar.from_json(data["phi1"]), HeckeChar.from_json(data["phi2"]))

    def __str__(self) -> str:
        return f"({self.phi1}, {self.phi2})"
