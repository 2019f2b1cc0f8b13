"""本模块实现了剩余类单位群 (O_K/f)^× 及其上的有限阶特征

群以多循环方式表示：生成元 g_1, …, g_r 依次贪心选取，g_j 的相对阶 m_j 是最小的
使 g_j^{m_j} 落入前 j−1 个生成元所生成子群的正整数，并记录关系
g_j^{m_j} = Π g_i^{c_ji}。每个元素唯一写成 Π g_j^{e_j}，0 ≤ e_j < m_j。

特征以生成元上的角度 θ_j ∈ Q/Z 表示，ε(g_j) = exp(2πi·θ_j)。
"""

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Any, Self

from bidict import bidict

from bianchi.arith import CycloNum
from bianchi.config import limit_config
from bianchi.exception import CharacterError, CoprimalityError, GroupBoundError
from bianchi.quadfield import QuadIdeal, QuadInt, divisors, factor_ideal

type Angles = tuple[Fraction, ...]
type Exponents = tuple[int, ...]


def unit_group_order(modulus: QuadIdeal) -> int:
    """|(O_K/f)^×| = Π N(q)^{e−1}(N(q) − 1)"""
    order = 1
    for q, e in factor_ideal(modulus):
        order *= q.norm ** (e - 1) * (q.norm - 1)
    return order


def pairing(exponents: Exponents, angles: Angles) -> Fraction:
    """Σ e_j θ_j mod 1"""
    return sum((e * t for e, t in zip(exponents, angles)), Fraction(0)) % 1


class ResidueGroup:
    """剩余类单位群 (O_K/f)^×"""

    __slots__ = (
        "modulus",
        "generators",
        "relative_orders",
        "relations",
        "orders",
        "table",
    )

    modulus: QuadIdeal
    """模 f"""
    generators: tuple[QuadInt, ...]
    """多循环生成元，均为标准代表元"""
    relative_orders: tuple[int, ...]
    """相对阶 m_j"""
    relations: tuple[Exponents, ...]
    """g_j^{m_j} 在前 j−1 个生成元下的指数"""
    orders: tuple[int, ...]
    """生成元在群中的阶"""
    table: bidict[QuadInt, Exponents]
    """标准代表元与指数向量的双向对照表"""

    def __init__(self, modulus: QuadIdeal) -> None:
        size = unit_group_order(modulus)
        if size > limit_config.max_group_order:
            raise GroupBoundError(
                f"(O/{modulus})^× 的阶 {size} 超出上限 {limit_config.max_group_order}"
            )
        primes = factor_ideal(modulus).primes()
        identity = modulus.reduce(1)
        table: bidict[QuadInt, Exponents] = bidict({identity: ()})
        generators: list[QuadInt] = []
        relative_orders: list[int] = []
        relations: list[Exponents] = []

        for candidate in modulus.residues():
            if len(table) == size:
                break
            if candidate in table or any(candidate in q for q in primes):
                continue
            power, m = candidate, 1
            while power not in table:
                power = modulus.reduce(power * candidate)
                m += 1
            relations.append(table[power])
            extended: bidict[QuadInt, Exponents] = bidict()
            current = identity
            for e in range(m):
                for h, exponents in table.items():
                    extended[modulus.reduce(current * h)] = (*exponents, e)
                current = modulus.reduce(current * candidate)
            table = extended
            generators.append(candidate)
            relative_orders.append(m)

        self.modulus = modulus
        self.generators = tuple(generators)
        self.relative_orders = tuple(relative_orders)
        self.relations = tuple(relations)
        self.table = table
        self.orders = tuple(self._element_order(g) for g in generators)

    def _element_order(self, element: QuadInt) -> int:
        identity = self.modulus.reduce(1)
        power, n = element, 1
        while power != identity:
            power = self.modulus.reduce(power * element)
            n += 1
        return n

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __contains__(self, element: QuadInt | int) -> bool:
        return self.modulus.reduce(element) in self.table

    def __iter__(self) -> Iterator[QuadInt]:
        return iter(self.table)

    def log(self, element: QuadInt | int) -> Exponents:
        """元素的指数向量

        ### 异常
            CoprimalityError: 元素与模不互素
        """
        try:
            return self.table[self.modulus.reduce(element)]
        except KeyError:
            raise CoprimalityError(
                f"{element} 在 (O/{self.modulus})^× 中不可逆"
            ) from None

    def element(self, exponents: Exponents) -> QuadInt:
        return self.table.inverse[tuple(e % m for e, m in zip(exponents, self.relative_orders))]

    def characters(self) -> Iterator[Angles]:
        """全部特征的角度向量，共 |G| 个

        逐个生成元解 m_j θ_j ≡ Σ c_ji θ_i (mod 1)。
        """

        def extend(prefix: Angles) -> Iterator[Angles]:
            j = len(prefix)
            if j == self.rank:
                yield prefix
                return
            base = sum(
                (c * t for c, t in zip(self.relations[j], prefix)), Fraction(0)
            )
            m = self.relative_orders[j]
            for k in range(m):
                yield from extend((*prefix, ((base + k) / m) % 1))

        yield from extend(())

    def check_angles(self, angles: Angles) -> bool:
        """角度向量是否满足全部关系"""
        if len(angles) != self.rank:
            return False
        for j, (m, relation) in enumerate(zip(self.relative_orders, self.relations)):
            if (m * angles[j] - pairing(relation, angles)) % 1:
                return False
        return True


@lru_cache(maxsize=1024)
def residue_group(modulus: QuadIdeal) -> ResidueGroup:
    return ResidueGroup(modulus)


def _lift_table(group: ResidueGroup, modulus: QuadIdeal) -> dict[QuadInt, QuadInt]:
    # (O/modulus)^× 中每个代表元在 (O/f)^× 中的一个原像
    lifts: dict[QuadInt, QuadInt] = {}
    for x in group:
        lifts.setdefault(modulus.reduce(x), x)
    return lifts


@dataclass(frozen=True, slots=True)
class ResidueCharacter:
    """(O_K/f)^× 上的特征 ε"""

    modulus: QuadIdeal
    """模 f"""
    angles: Angles
    """生成元上的角度，ε(g_j) = exp(2πi·θ_j)"""

    def __post_init__(self) -> None:
        angles = tuple(Fraction(t) % 1 for t in self.angles)
        object.__setattr__(self, "angles", angles)
        if not self.group.check_angles(angles):
            raise CharacterError(f"角度 {angles} 不满足 (O/{self.modulus})^× 的关系")

    # ========== 构造 ==========

    @classmethod
    def trivial(cls, modulus: QuadIdeal) -> Self:
        return cls(modulus, (Fraction(0),) * residue_group(modulus).rank)

    @classmethod
    def from_images(
        cls, modulus: QuadIdeal, images: Mapping[QuadInt | int, CycloNum | Fraction]
    ) -> Self:
        """由若干元素上的取值确定特征。

        ### 参数
            modulus: 模 f

            images: 元素到取值（单位根或角度）的映射

        ### 异常
            CharacterError: 取值不是单位根，或不存在、不能唯一确定特征
        """
        group = residue_group(modulus)
        targets: list[tuple[Exponents, Fraction]] = []
        for element, value in images.items():
            angle = value.root_angle() if isinstance(value, CycloNum) else Fraction(value)
            if angle is None:
                raise CharacterError(f"{element} 处的取值 {value!r} 不是单位根")
            targets.append((group.log(element), angle % 1))
        matches = [
            angles
            for angles in group.characters()
            if all(pairing(exps, angles) == angle for exps, angle in targets)
        ]
        if not matches:
            raise CharacterError(f"(O/{modulus})^× 上不存在满足给定取值的特征")
        if len(matches) > 1:
            raise CharacterError(
                f"给定取值不能唯一确定 (O/{modulus})^× 上的特征，共 {len(matches)} 个候选"
            )
        return cls(modulus, matches[0])

    # ========== 取值 ==========

    @property
    def group(self) -> ResidueGroup:
        return residue_group(self.modulus)

    def angle(self, element: QuadInt | int) -> Fraction:
        """ε(x) 的角度，x 必须与模互素"""
        return pairing(self.group.log(element), self.angles)

    def __call__(self, element: QuadInt | int) -> CycloNum:
        """ε(x)，x 与模不互素时为 0"""
        if element not in self.group:
            return CycloNum.zero()
        return CycloNum.from_angle(self.angle(element))

    def is_trivial(self) -> bool:
        return not any(self.angles)

    @property
    def order(self) -> int:
        return lcm(1, *(t.denominator for t in self.angles))

    @property
    def exponents(self) -> Exponents:
        """ε(g_j) = ζ_{o_j}^{e_j} 中的 e_j，o_j 为生成元的阶"""
        return tuple(
            int(t * o) for t, o in zip(self.angles, self.group.orders)
        )

    # ========== 导子 ==========

    def conductor(self) -> QuadIdeal:
        return _conductor(self)

    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus

    def restrict(self, modulus: QuadIdeal) -> "ResidueCharacter":
        """把 ε 下降到 modulus 上，modulus 必须整除 f 且被导子整除"""
        if not (modulus.divides(self.modulus) and self.conductor().divides(modulus)):
            raise CharacterError(f"ε 无法经由 {modulus} 分解")
        target = residue_group(modulus)
        lifts = _lift_table(self.group, modulus)
        return ResidueCharacter(
            modulus, tuple(self.angle(lifts[g]) for g in target.generators)
        )

    def primitive(self) -> "ResidueCharacter":
        conductor = self.conductor()
        if conductor == self.modulus:
            return self
        return self.restrict(conductor)

    def lift(self, modulus: QuadIdeal) -> "ResidueCharacter":
        """把 ε 拉回到 f 的倍数 modulus 上"""
        if modulus == self.modulus:
            return self
        if not self.modulus.divides(modulus):
            raise CharacterError(f"{self.modulus} 不整除 {modulus}")
        target = residue_group(modulus)
        return ResidueCharacter(
            modulus, tuple(self.angle(g) for g in target.generators)
        )

    # ========== 运算 ==========

    def conj(self) -> "ResidueCharacter":
        """模 f̄ 上的特征 h ↦ ε(h̄)"""
        modulus = self.modulus.conj()
        target = residue_group(modulus)
        return ResidueCharacter(
            modulus, tuple(self.angle(g.conj()) for g in target.generators)
        )

    def inv(self) -> "ResidueCharacter":
        return ResidueCharacter(self.modulus, tuple(-t for t in self.angles))

    def __mul__(self, other: "ResidueCharacter") -> "ResidueCharacter":
        modulus = self.modulus.lcm(other.modulus)
        x, y = self.lift(modulus), other.lift(modulus)
        return ResidueCharacter(
            modulus, tuple(s + t for s, t in zip(x.angles, y.angles))
        )

    # ========== 序列化 ==========

    def to_json(self) -> dict[str, Any]:
        group = self.group
        return {
            "modulus": self.modulus.to_json(),
            "generators": [
                {"element": g.to_json(), "order": o, "exponent": e}
                for g, o, e in zip(group.generators, group.orders, self.exponents)
            ],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Self:
        modulus = QuadIdeal.from_json(data["modulus"])
        group = residue_group(modulus)
        items = data["generators"]
        elements = tuple(QuadInt.from_json(modulus.field, item["element"]) for item in items)
        if elements != group.generators:
            raise CharacterError(
                f"序列化的生成元 {[str(g) for g in elements]} 与 (O/{modulus})^× 的生成元不一致"
            )
        return cls(
            modulus,
            tuple(Fraction(int(item["exponent"]), int(item["order"])) for item in items),
        )

    def __str__(self) -> str:
        values = ", ".join(
            f"{g}↦{t}" for g, t in zip(self.group.generators, self.angles)
        )
        return f"ε mod {self.modulus} [{values}]"


@lru_cache(maxsize=8192)
def _conductor(char: ResidueCharacter) -> QuadIdeal:
    # 导子是使 ε 在 {x ≡ 1 mod g} 上平凡的范数最小的因子 g
    group = char.group
    for g in divisors(char.modulus):
        if all(
            pairing(exponents, char.angles) == 0
            for x, exponents in group.table.items()
            if (x - 1) in g
        ):
            return g
    return char.modulus
