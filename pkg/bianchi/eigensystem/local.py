"""本模块计算诱导表示中 K₁(q^n) 不变向量的维数

公式为 #{0 ≤ i ≤ n : c₁ ≤ i, c₂ ≤ n − i} = max(0, n − c₁ − c₂ + 1)。

穷举验证在 P¹(O/q^M) 上进行：不变向量对应满足

    F(δ·v) = ψ(δ)·F(v)，ψ = χ₂/χ₁
    F(v·k) = χ₁(det k)^{−1}·F(v)，k ∈ K₁(q^n)

的函数 F，维数等于 K₁(q^n) 作用下取值相容的轨道个数。
"""

from collections import deque
from fractions import Fraction

from bianchi.characters import ResidueCharacter, residue_group
from bianchi.config import limit_config
from bianchi.exception import EigensystemError
from bianchi.quadfield import QuadIdeal, QuadInt, is_prime_ideal

type Vector = tuple[QuadInt, QuadInt]
type Matrix = tuple[QuadInt, QuadInt, QuadInt, QuadInt]


def local_invariant_dim(
    c1: int, c2: int, n: int, *, iwahori_extra: bool = False
) -> int:
    """局部不变向量的维数。

    ### 参数
        c1: χ₁ 在 q 处的导子指数

        c2: χ₂ 在 q 处的导子指数

        n: 水平指数 n_q

        iwahori_extra: 是否为非分歧辅助素理想处的 Iwahori 水平
    """
    if min(c1, c2, n) < 0:
        raise ValueError(f"指数必须非负: ({c1}, {c2}, {n})")
    if iwahori_extra:
        if c1 or c2:
            raise EigensystemError("Iwahori 辅助水平要求两个特征都在该处非分歧")
        return 2
    return max(0, n - c1 - c2 + 1)


def local_character(prime: QuadIdeal, exponent: int, precision: int) -> ResidueCharacter | None:
    """(O/q^precision)^× 上导子恰为 q^exponent 的第一个特征，不存在时返回 None"""
    modulus = prime**precision
    target = prime**exponent
    for angles in residue_group(modulus).characters():
        char = ResidueCharacter(modulus, angles)
        if char.conductor() == target:
            return char
    return None


def _subgroup_generators(
    modulus: QuadIdeal, elements: list[QuadInt]
) -> list[QuadInt]:
    # 贪心选取生成元直到张成全部元素
    span = {modulus.reduce(1)}
    generators = []
    for x in elements:
        if x in span:
            continue
        generators.append(x)
        powers = [modulus.reduce(1)]
        power = x
        while power not in span:
            powers.append(power)
            power = modulus.reduce(power * x)
        span = {modulus.reduce(s * t) for s in span for t in powers}
    return generators


class CosetOracle:
    """有限陪集空间上的不变向量计数器"""

    def __init__(
        self, prime: QuadIdeal, chi1: ResidueCharacter, chi2: ResidueCharacter, n: int
    ) -> None:
        modulus = chi1.modulus
        if chi2.modulus != modulus:
            raise EigensystemError("两个局部特征必须定义在同一个模上")
        if modulus.norm > limit_config.max_oracle_size:
            raise EigensystemError(
                f"陪集空间 P¹(O/{modulus}) 超出上限 {limit_config.max_oracle_size}"
            )
        self.prime = prime
        self.modulus = modulus
        self.chi1 = chi1
        self.chi2 = chi2
        self.level = n
        group = residue_group(modulus)
        self.units = list(group)
        size = group.size
        self.inverse = {x: self._power(x, size - 1) for x in self.units}

    def _power(self, x: QuadInt, e: int) -> QuadInt:
        result = self.modulus.reduce(1)
        base = x
        while e:
            if e & 1:
                result = self.modulus.reduce(result * base)
            base = self.modulus.reduce(base * base)
            e >>= 1
        return result

    def _psi(self, delta: QuadInt) -> Fraction:
        return (self.chi2.angle(delta) - self.chi1.angle(delta)) % 1

    def points(self) -> list[Vector]:
        """P¹(O/q^M) 的标准代表元 (x, 1) 与 (1, y)，y ∈ q"""
        one = self.modulus.reduce(1)
        residues = list(self.modulus.residues())
        points = [(x, one) for x in residues]
        points.extend((one, y) for y in residues if y in self.prime)
        return points

    def normalize(self, vector: Vector) -> tuple[QuadInt, Vector]:
        """v = δ·r，r 为标准代表元"""
        c, d = (self.modulus.reduce(t) for t in vector)
        if d in self.inverse:
            return d, (self.modulus.reduce(c * self.inverse[d]), self.modulus.reduce(1))
        if c in self.inverse:
            return c, (self.modulus.reduce(1), self.modulus.reduce(d * self.inverse[c]))
        raise EigensystemError(f"{vector} 不是本原向量")

    def generators(self) -> list[tuple[Matrix, Fraction]]:
        """K₁(q^n) 模 q^M 的生成元及 χ₁(det k)^{−1} 的角度"""
        field = self.modulus.field
        zero, one = QuadInt(field, 0), QuadInt(field, 1)
        result: list[tuple[Matrix, Fraction]] = []
        group = residue_group(self.modulus)
        for u in group.generators:
            result.append(((u, zero, zero, one), -self.chi1.angle(u) % 1))
        for beta in (one, field.omega):
            result.append(((one, beta, zero, one), Fraction(0)))
        level_ideal = self.prime**self.level
        for gamma in level_ideal.basis():
            result.append(((one, zero, gamma, one), Fraction(0)))
        congruent = [x for x in self.units if (x - 1) in level_ideal]
        for u in _subgroup_generators(self.modulus, congruent):
            result.append(((one, zero, zero, u), -self.chi1.angle(u) % 1))
        return result

    def count(self) -> int:
        """相容轨道的个数"""
        generators = self.generators()
        potential: dict[Vector, Fraction] = {}
        consistent = 0
        for start in self.points():
            if start in potential:
                continue
            potential[start] = Fraction(0)
            queue = deque([start])
            ok = True
            while queue:
                point = queue.popleft()
                c, d = point
                for (p, q, r, s), det_angle in generators:
                    image = (c * p + d * r, c * q + d * s)
                    delta, target = self.normalize(image)
                    value = (potential[point] + det_angle - self._psi(delta)) % 1
                    if target not in potential:
                        potential[target] = value
                        queue.append(target)
                    elif potential[target] != value:
                        ok = False
            consistent += ok
        return consistent


def local_dim_oracle(prime: QuadIdeal, c1: int, c2: int, n: int) -> int | None:
    """用陪集穷举计算局部不变向量的维数。

    ### 参数
        prime: 素理想 q

        c1: χ₁ 的导子指数

        c2: χ₂ 的导子指数

        n: 水平指数

    ### 返回
        维数；(O/q^M)^× 上不存在给定导子指数的特征时返回 None
    """
    if not is_prime_ideal(prime):
        raise EigensystemError(f"{prime} 不是素理想")
    precision = max(n, c1, c2, 1)
    chi1 = local_character(prime, c1, precision)
    chi2 = local_character(prime, c2, precision)
    if chi1 is None or chi2 is None:
        return None
    return CosetOracle(prime, chi1, chi2, n).count()
