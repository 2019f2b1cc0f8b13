"""本模块实现了代数 Hecke 特征的构造、求值、运算与枚举

无穷型 (a, b) 的约定：对与导子互素的理想 I = (α)，

    χ(I) = ε(α)·α^{−a}·ᾱ^{−b}

其中 ε 是 (O_K/f)^× 上的有限阶特征。该约定要求对每个单位 u 有 ε(u) = u^{a−b}。
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Literal, Self, overload

from bianchi.arith import CycloNum
from bianchi.exception import (
    CharacterError,
    FieldError,
    UnitCompatibilityError,
    UnsupportedFieldError,
)
from bianchi.log import new_logger
from bianchi.quadfield import QuadField, QuadIdeal, QuadInt, canonical_generator

from .residue import ResidueCharacter, pairing, residue_group

logger = new_logger("bianchi.characters")

type InfinityType = tuple[int, int]
type CharOp = Literal["conjugate", "inverse", "norm_twist", "multiply"]


def _unit_angle(field: QuadField, infinity_type: InfinityType) -> Fraction:
    # 单位群生成元 u₀ = exp(2πi/w) 处 ε(u₀) 必须取的角度
    a, b = infinity_type
    return Fraction(a - b, field.w) % 1


def check_unit_compatibility(
    field: QuadField, infinity_type: InfinityType, eps: ResidueCharacter
) -> None:
    """检查 ε(u)·u^{−a}·ū^{−b} = 1 对全部单位成立。

    ### 异常
        UnitCompatibilityError: 某个单位不满足条件，异常中记录第一个违反的单位
    """
    step = _unit_angle(field, infinity_type)
    for j, unit in enumerate(field.units()):
        if eps.angle(unit) != (j * step) % 1:
            raise UnitCompatibilityError(
                f"单位 {unit} 不满足相容性: ε({unit}) = {eps(unit)!r}，"
                f"而 {unit}^{infinity_type[0] - infinity_type[1]} 的角度为 {(j * step) % 1}",
                unit=unit,
            )


@dataclass(frozen=True, slots=True, eq=False)
class HeckeChar:
    """代数 Hecke 特征"""

    field: QuadField
    """所在的域"""
    modulus: QuadIdeal
    """模 f"""
    infinity_type: InfinityType
    """无穷型 (a, b)"""
    eps: ResidueCharacter
    """有限部分 ε"""

    def __post_init__(self) -> None:
        if self.modulus.field != self.field:
            raise FieldError(f"模 {self.modulus} 不属于 {self.field}")
        if self.eps.modulus != self.modulus:
            raise CharacterError(f"ε 的模 {self.eps.modulus} 与 {self.modulus} 不一致")
        object.__setattr__(
            self, "infinity_type", (int(self.infinity_type[0]), int(self.infinity_type[1]))
        )

    @classmethod
    def trivial(cls, field: QuadField) -> Self:
        unit = QuadIdeal.unit(field)
        return cls(field, unit, (0, 0), ResidueCharacter.trivial(unit))

    @classmethod
    def norm_power(cls, field: QuadField, m: int) -> Self:
        """|·|^m，即 q ↦ N(q)^{−m}"""
        unit = QuadIdeal.unit(field)
        return cls(field, unit, (m, m), ResidueCharacter.trivial(unit))

    # ========== 基本性质 ==========

    @property
    def conductor(self) -> QuadIdeal:
        return self.eps.conductor()

    def primitive(self) -> "HeckeChar":
        if self.eps.is_primitive():
            return self
        eps = self.eps.primitive()
        return HeckeChar(self.field, eps.modulus, self.infinity_type, eps)

    def is_primitive(self) -> bool:
        return self.eps.is_primitive()

    @property
    def key(self) -> tuple[Any, ...]:
        eps = self.eps.primitive()
        return (self.field.d, eps.modulus.sort_key, self.infinity_type, eps.angles)

    @property
    def sort_key(self) -> tuple[Any, ...]:
        return self.key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeChar):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    # ========== 求值 ==========

    def value_at(self, alpha: QuadInt) -> CycloNum:
        """χ((α)) = ε(α)·α^{−a}·ᾱ^{−b}，α 必须与模互素"""
        if alpha.is_zero():
            raise CharacterError("不能在 0 处求值")
        a, b = self.infinity_type
        conj = alpha.conj()
        numerator = QuadInt(self.field, 1)
        numerator *= conj**a if a >= 0 else alpha ** (-a)
        numerator *= alpha**b if b >= 0 else conj ** (-b)
        denominator = alpha.norm() ** (max(a, 0) + max(b, 0))
        return self.eps(alpha) * numerator.to_cyclo() / denominator

    def __call__(self, ideal: QuadIdeal) -> CycloNum:
        return eval_char(self, ideal)

    # ========== 运算 ==========

    def conjugate(self) -> "HeckeChar":
        """χ^c = χ ∘ c"""
        a, b = self.infinity_type
        eps = self.eps.primitive().conj()
        return HeckeChar(self.field, eps.modulus, (b, a), eps)

    def inverse(self) -> "HeckeChar":
        a, b = self.infinity_type
        eps = self.eps.primitive().inv()
        return HeckeChar(self.field, eps.modulus, (-a, -b), eps)

    def norm_twist(self, m: int) -> "HeckeChar":
        """χ·|·|^m，无穷型加 (m, m)"""
        a, b = self.infinity_type
        eps = self.eps.primitive()
        return HeckeChar(self.field, eps.modulus, (a + m, b + m), eps)

    def shift_type(self, da: int, db: int) -> "HeckeChar":
        """有限部分不变、无穷型平移 (da, db)

        ### 异常
            UnitCompatibilityError: 平移后不满足单位相容性
        """
        a, b = self.infinity_type
        eps = self.eps.primitive()
        return build_char(eps.modulus, (a + da, b + db), eps, field=self.field)

    def __mul__(self, other: "HeckeChar") -> "HeckeChar":
        if other.field != self.field:
            raise FieldError(f"{self.field} 与 {other.field} 上的特征无法相乘")
        eps = (self.eps.primitive() * other.eps.primitive()).primitive()
        a1, b1 = self.infinity_type
        a2, b2 = other.infinity_type
        return HeckeChar(self.field, eps.modulus, (a1 + a2, b1 + b2), eps)

    # ========== 序列化 ==========

    def to_json(self) -> dict[str, Any]:
        return {
            "field_d": self.field.d,
            "conductor": self.conductor.to_json(),
            "infinity_type": list(self.infinity_type),
            "eps": self.eps.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        field = QuadField(int(data["field_d"]))
        eps = ResidueCharacter.from_json(data["eps"])
        a, b = data["infinity_type"]
        return build_char(eps.modulus, (int(a), int(b)), eps, field=field)

    def __str__(self) -> str:
        a, b = self.infinity_type
        return f"χ[{self.field}, f={self.conductor}, ({a},{b}), angles={list(map(str, self.eps.primitive().angles))}]"


def build_char(
    modulus: QuadIdeal,
    infinity_type: InfinityType,
    eps: ResidueCharacter,
    *,
    field: QuadField | None = None,
) -> HeckeChar:
    """构造 Hecke 特征。

    ### 参数
        modulus: 模 f

        infinity_type: 无穷型 (a, b)

        eps: (O_K/f)^× 上的特征

        field: 所在的域，默认为模所在的域

    ### 异常
        UnsupportedFieldError: 类数不为 1

        UnitCompatibilityError: 单位相容性失败
    """
    field = field or modulus.field
    if not field.class_number_one:
        raise UnsupportedFieldError(f"{field} 的类数不为 1，不支持 Hecke 特征")
    if eps.modulus != modulus:
        raise CharacterError(f"ε 的模 {eps.modulus} 与 {modulus} 不一致")
    check_unit_compatibility(field, infinity_type, eps)
    return HeckeChar(field, modulus, infinity_type, eps)


@lru_cache(maxsize=65536)
def eval_char(char: HeckeChar, ideal: QuadIdeal) -> CycloNum:
    """χ(I)，I 与导子不互素时为 0。

    ### 异常
        UnsupportedFieldError: I 不是主理想
    """
    primitive = char.primitive()
    if not ideal.is_coprime(primitive.modulus):
        return CycloNum.zero()
    return primitive.value_at(canonical_generator(ideal))


@overload
def char_algebra(
    char: HeckeChar, op: Literal["conjugate", "inverse"], arg: None = None
) -> HeckeChar: ...


@overload
def char_algebra(char: HeckeChar, op: Literal["norm_twist"], arg: int) -> HeckeChar: ...


@overload
def char_algebra(
    char: HeckeChar, op: Literal["multiply"], arg: HeckeChar
) -> HeckeChar: ...


def char_algebra(
    char: HeckeChar, op: CharOp, arg: HeckeChar | int | None = None
) -> HeckeChar:
    """Hecke 特征的运算，结果总是本原的。

    ### 参数
        char: 特征

        op: 运算名称

        arg: `norm_twist` 的整数 m，或 `multiply` 的另一个特征
    """
    match op, arg:
        case "conjugate", _:
            return char.conjugate()
        case "inverse", _:
            return char.inverse()
        case "norm_twist", int(m):
            return char.norm_twist(m)
        case "multiply", HeckeChar() as other:
            return char * other
        case _:
            raise ValueError(f"运算 {op} 缺少参数或不受支持")


def enumerate_chars(
    field: QuadField, bound: QuadIdeal, infinity_type: InfinityType
) -> list[HeckeChar]:
    """导子整除 bound、无穷型给定的全部 Hecke 特征，以本原形式按标准顺序返回。

    ### 参数
        field: 类数为 1 的虚二次域

        bound: 导子上界 f

        infinity_type: 无穷型 (a, b)

    ### 异常
        GroupBoundError: |(O/f)^×| 超出上限
    """
    if not field.class_number_one:
        raise UnsupportedFieldError(f"{field} 的类数不为 1，不支持 Hecke 特征")
    group = residue_group(bound)
    target = _unit_angle(field, infinity_type)
    unit_exponents = group.log(field.unit_generator)
    chars = {
        HeckeChar(
            field, bound, infinity_type, ResidueCharacter(bound, angles)
        ).primitive()
        for angles in group.characters()
        if pairing(unit_exponents, angles) == target
    }
    result = sorted(chars, key=lambda c: c.sort_key)
    logger.opt(colors=True).debug(
        f"枚举 <y>{field}</y> 上模 <c>{bound}</c>、无穷型 <c>{infinity_type}</c> 的特征: 共 {len(result)} 个"
    )
    return result


@lru_cache(maxsize=4096)
def _chars_of_conductor(
    field: QuadField, conductor: QuadIdeal, infinity_type: InfinityType
) -> tuple[HeckeChar, ...]:
    return tuple(
        c for c in enumerate_chars(field, conductor, infinity_type)
        if c.conductor == conductor
    )


def chars_of_conductor(
    field: QuadField, conductor: QuadIdeal, infinity_type: InfinityType
) -> list[HeckeChar]:
    """导子恰为 conductor 的本原特征，按标准顺序"""
    return list(_chars_of_conductor(field, conductor, tuple(infinity_type)))
