"""本模块由无穷型 (−k−1, 0) 的 Hecke 特征 φ 构造 theta 级数的数据

φ_Z(a) = φ((a))·a^{−k−1} 是模 M = N(m) 的 Dirichlet 特征，theta 级数是权 k + 2、
水平 D·M、特征 ε_f = χ_K·φ_Z 的新形式，其系数 a_n = Σ_{N(I)=n} φ(I)。
"""

from dataclasses import dataclass
from math import gcd
from typing import Any

from sympy import factorint

from bianchi.arith import CycloNum
from bianchi.characters import HeckeChar
from bianchi.exception import BaseChangeError
from bianchi.log import new_logger
from bianchi.quadfield import QuadIdeal, SplitKind, split_prime

logger = new_logger("bianchi.basechange")


@dataclass(frozen=True)
class BaseChangeInput:
    """基变换的输入特征 φ 及其假设"""

    phi: HeckeChar
    level_exactly_m: bool = False
    """用户声明基变换的水平恰为 M·O_K，无法验证，只记录在报告中"""
    p: int | None = None

    def __post_init__(self) -> None:
        a, b = self.phi.infinity_type
        if b != 0 or a > -1:
            raise BaseChangeError(f"无穷型必须为 (−k−1, 0)，k ≥ 0: {self.phi.infinity_type}")
        object.__setattr__(self, "phi", self.phi.primitive())
        m = self.phi.conductor
        if not m.is_coprime(m.conj()):
            raise BaseChangeError(f"导子 {m} 与其共轭不互素")
        if self.p is not None and m.norm % self.p == 0:
            raise BaseChangeError(f"p={self.p} 整除导子 {m} 的范数")

    @property
    def k(self) -> int:
        return -self.phi.infinity_type[0] - 1

    @property
    def m(self) -> QuadIdeal:
        return self.phi.conductor

    @property
    def M(self) -> int:
        return self.m.norm

    @property
    def flags(self) -> dict[str, Any]:
        return {
            "m_coprime_to_conjugate": True,
            # 未给定 p 时该假设未检验
            "p_coprime_to_m": None if self.p is None else gcd(self.p, self.M) == 1,
            "level_exactly_m": self.level_exactly_m,
        }

    def to_json(self) -> dict[str, Any]:
        return {
            "phi": self.phi.to_json(),
            "k": self.k,
            "M": self.M,
            "p": self.p,
            "flags": self.flags,
        }


def _unit_generators(M: int) -> list[int]:
    # (Z/M)^× 的一组生成元，贪心选取
    units = [a for a in range(1, M + 1) if gcd(a, M) == 1]
    span = {1 % M}
    generators = []
    for a in units:
        if a % M in span:
            continue
        generators.append(a)
        powers = {1 % M}
        x = a % M
        while x not in powers:
            powers.add(x)
            x = x * a % M
        span = {s * t % M for s in span for t in powers}
    return generators


@dataclass(frozen=True)
class DirichletData:
    """φ_Z 与 ε_f"""

    source: BaseChangeInput
    values: dict[int, CycloNum]
    """φ_Z 在 (Z/M)^× 全部代表元 1 ≤ a ≤ M 上的值"""
    generators: tuple[int, ...]

    @property
    def M(self) -> int:
        return self.source.M

    def phi_z(self, a: int) -> CycloNum:
        """φ_Z(a)，a 与 M 不互素时为 0"""
        if gcd(a, self.M) != 1:
            return CycloNum.zero()
        return self.values[a % self.M or self.M]

    def chi_k(self, a: int) -> int:
        """二次特征 χ_K(a) = (−D/a)，a > 0"""
        return self.source.phi.field.kronecker(a)

    def nebentypus(self, a: int) -> CycloNum:
        """ε_f(a) = χ_K(a)·φ_Z(a)，模 D·M"""
        return self.phi_z(a) * self.chi_k(a)

    def to_json(self) -> dict[str, Any]:
        return {
            "M": self.M,
            "generators": {str(g): self.values[g].to_json() for g in self.generators},
        }


def phi_z_value(inp: BaseChangeInput, a: int) -> CycloNum:
    """φ_Z(a) = φ((a))·a^{−k−1}

    ### 异常
        BaseChangeError: 取值不是单位根，说明无穷型的约定有误
    """
    field = inp.phi.field
    value = inp.phi(QuadIdeal.generated_by(field, a)) / CycloNum.rational(a) ** (inp.k + 1)
    if value.root_angle() is None:
        raise BaseChangeError(f"φ_Z({a}) = {value!r} 不是单位根，无穷型约定不一致")
    return value


def dirichlet_from_hecke(inp: BaseChangeInput) -> DirichletData:
    """φ 诱导的 Dirichlet 特征 φ_Z 与 theta 级数的特征 ε_f"""
    M = inp.M
    values = {
        a: phi_z_value(inp, a) for a in range(1, M + 1) if gcd(a, M) == 1
    }
    return DirichletData(inp, values, tuple(_unit_generators(M)))


@dataclass(frozen=True)
class ThetaData:
    """φ 的 theta 级数"""

    source: BaseChangeInput
    dirichlet: DirichletData

    @property
    def weight(self) -> int:
        return self.source.k + 2

    @property
    def level(self) -> int:
        return self.source.phi.field.D * self.source.M

    def prime_coefficient(self, q: int) -> CycloNum:
        """a_q：分裂时 φ(𝔮) + φ(𝔮̄)，惰性时 0，分歧时 φ(𝔮)"""
        phi = self.source.phi
        splitting = split_prime(phi.field, q)
        match splitting.kind:
            case SplitKind.SPLIT:
                first, second = splitting.primes
                return phi(first) + phi(second)
            case SplitKind.INERT:
                return CycloNum.zero()
            case _:
                return phi(splitting.primes[0])

    def coefficients(self, bound: int) -> list[CycloNum]:
        return theta_coefficients(self, bound)

    def to_json(self) -> dict[str, Any]:
        return {
            "weight": self.weight,
            "level": self.level,
            "nebentypus": self.dirichlet.to_json(),
        }


def theta_data(inp: BaseChangeInput) -> ThetaData:
    return ThetaData(inp, dirichlet_from_hecke(inp))


def theta_coefficients(theta: ThetaData, bound: int) -> list[CycloNum]:
    """theta 级数的系数 a_1, …, a_bound。

    素数幂处用 a_{q^{r+1}} = a_q·a_{q^r} − ε_f(q)·q^{k+1}·a_{q^{r−1}}，再按积性合成。
    """
    k = theta.source.k
    cache: dict[int, CycloNum] = {1: CycloNum.one()}

    def prime_power(q: int, r: int) -> CycloNum:
        key = q**r
        if key in cache:
            return cache[key]
        value = theta.prime_coefficient(q) * prime_power(q, r - 1)
        if r >= 2:
            char = theta.dirichlet.nebentypus(q) * q ** (k + 1)
            value = value - char * prime_power(q, r - 2)
        cache[key] = value
        return value

    result = []
    for n in range(1, bound + 1):
        value = CycloNum.one()
        for q, r in factorint(n).items():
            value = value * prime_power(int(q), int(r))
        result.append(value)
    logger.opt(colors=True).debug(f"theta 系数计算至 n=<y>{bound}</y>")
    return result
