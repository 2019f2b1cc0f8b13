"""本模块实现了特征对的 Eisenstein 特征系统

对与水平互素的素理想 q，

    a_q = φ₁(q)^{−1} + N(q)·φ₂(q)^{−1}，  d_q = φ₁(q)^{−1}·φ₂(q)^{−1}

水平处的 U_q 特征值为 N(q)·φ₂(q)^{−1}（q | n₁）或 φ₁(q)^{−1}（q | n₂）。
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from bianchi.arith import CycloNum
from bianchi.characters import CharPair, eval_char
from bianchi.exception import EigensystemError
from bianchi.log import new_logger
from bianchi.quadfield import QuadIdeal, factor_ideal, is_prime_ideal, prime_ideals
from bianchi.utils import write_csv

logger = new_logger("bianchi.eigensystem")

CSV_COLUMNS = ["prime", "norm", "a_q", "d_q"]
"""特征系统表的 CSV 列"""


class LevelCase(str, Enum):
    """素理想相对水平的位置"""

    COPRIME = "coprime"
    DIVIDES_N1 = "divides_n1"
    DIVIDES_N2 = "divides_n2"


@dataclass(frozen=True, slots=True)
class HeckeEigenvalues:
    """T_q 与 T_{q,q} 的特征值"""

    prime: QuadIdeal
    a: CycloNum
    d: CycloNum

    def to_json(self) -> dict[str, Any]:
        return {
            "prime": self.prime.to_json(),
            "norm": self.prime.norm,
            "a_q": self.a.to_json(),
            "d_q": self.d.to_json(),
        }


@dataclass(frozen=True, slots=True)
class UEigenvalue:
    """水平处 U_q 的特征值"""

    prime: QuadIdeal
    value: CycloNum
    case: LevelCase

    def to_json(self) -> dict[str, Any]:
        return {
            "prime": self.prime.to_json(),
            "U_q": self.value.to_json(),
            "case": self.case.value,
        }


@dataclass(frozen=True, slots=True)
class HeckePolynomial:
    """Hecke 多项式 x² − a_q·x + N(q)·d_q 及其两根"""

    prime: QuadIdeal
    a: CycloNum
    d: CycloNum
    alpha: CycloNum
    """α_q = N(q)·φ₂(q)^{−1}"""
    beta: CycloNum
    """β_q = φ₁(q)^{−1}"""

    @property
    def norm(self) -> int:
        return self.prime.norm

    def evaluate(self, x: CycloNum) -> CycloNum:
        return x * x - self.a * x + self.d * self.norm

    def check_vieta(self) -> bool:
        return self.alpha + self.beta == self.a and self.alpha * self.beta == self.d * self.norm

    def to_json(self) -> dict[str, Any]:
        return {
            "prime": self.prime.to_json(),
            "a_q": self.a.to_json(),
            "d_q": self.d.to_json(),
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
        }


def level_case(pair: CharPair, prime: QuadIdeal) -> LevelCase:
    in_n1 = prime.divides(pair.n1)
    in_n2 = prime.divides(pair.n2)
    if in_n1 and in_n2:
        raise EigensystemError(f"{prime} 同时整除两个导子")
    if in_n1:
        return LevelCase.DIVIDES_N1
    if in_n2:
        return LevelCase.DIVIDES_N2
    return LevelCase.COPRIME


def _roots(pair: CharPair, prime: QuadIdeal) -> tuple[CycloNum, CycloNum]:
    # (α_q, β_q)
    alpha = eval_char(pair.phi2, prime).inv() * prime.norm
    beta = eval_char(pair.phi1, prime).inv()
    return alpha, beta


def eis_eigensystem(pair: CharPair, prime: QuadIdeal) -> HeckeEigenvalues | UEigenvalue:
    """素理想处的特征值。

    ### 参数
        pair: 特征对 φ

        prime: 素理想 q

    ### 返回
        q 与水平互素时为 (a_q, d_q)，否则为带情形标记的 U_q
    """
    if not is_prime_ideal(prime):
        raise EigensystemError(f"{prime} 不是素理想")
    match level_case(pair, prime):
        case LevelCase.DIVIDES_N1:
            value = eval_char(pair.phi2, prime).inv() * prime.norm
            return UEigenvalue(prime, value, LevelCase.DIVIDES_N1)
        case LevelCase.DIVIDES_N2:
            value = eval_char(pair.phi1, prime).inv()
            return UEigenvalue(prime, value, LevelCase.DIVIDES_N2)
        case _:
            inv1 = eval_char(pair.phi1, prime).inv()
            inv2 = eval_char(pair.phi2, prime).inv()
            return HeckeEigenvalues(prime, inv1 + inv2 * prime.norm, inv1 * inv2)


def hecke_polynomial(pair: CharPair, prime: QuadIdeal) -> HeckePolynomial:
    """与水平互素的素理想处的 Hecke 多项式"""
    values = eis_eigensystem(pair, prime)
    if not isinstance(values, HeckeEigenvalues):
        raise EigensystemError(f"{prime} 整除水平 {pair.level}")
    alpha, beta = _roots(pair, prime)
    return HeckePolynomial(prime, values.a, values.d, alpha, beta)


def iwahori_u_eigenvalues(pair: CharPair, prime: QuadIdeal) -> tuple[CycloNum, CycloNum]:
    """辅助素理想 r ∤ n 处 U_r 在 P¹(O_r) 的两个轨道上的特征值 N(r)^{i−1}χ_i(r)^{−1}

    ### 返回
        (χ₁(r)^{−1}, N(r)·χ₂(r)^{−1})，即 (β_r, α_r)
    """
    if level_case(pair, prime) is not LevelCase.COPRIME:
        raise EigensystemError(f"辅助素理想 {prime} 必须与水平 {pair.level} 互素")
    alpha, beta = _roots(pair, prime)
    return beta, alpha


def involution(pair: CharPair) -> CharPair:
    """φ′ = (φ₂|·|, φ₁|·|^{−1})"""
    return CharPair(pair.phi2.norm_twist(1), pair.phi1.norm_twist(-1))


@dataclass(frozen=True)
class Eigensystem:
    """特征对的 Eisenstein 特征系统"""

    pair: CharPair
    extra_level: tuple[QuadIdeal, ...] = field(default=())
    """额外的 Iwahori 水平，例如 p 之上的素理想"""

    @property
    def level(self) -> QuadIdeal:
        return self.pair.level

    def is_unramified_at(self, prime: QuadIdeal) -> bool:
        return prime.is_coprime(self.level) and prime not in self.extra_level

    def __call__(self, prime: QuadIdeal) -> HeckeEigenvalues | UEigenvalue:
        return eis_eigensystem(self.pair, prime)

    def eigenvalues(self, prime: QuadIdeal) -> HeckeEigenvalues:
        if not self.is_unramified_at(prime):
            raise EigensystemError(f"{prime} 整除水平")
        values = eis_eigensystem(self.pair, prime)
        assert isinstance(values, HeckeEigenvalues)
        return values

    def u_eigenvalues(self) -> list[UEigenvalue]:
        """全部水平素理想处的 U_q"""
        result = []
        for q in factor_ideal(self.level).primes():
            value = eis_eigensystem(self.pair, q)
            assert isinstance(value, UEigenvalue)
            result.append(value)
        return result

    def primes(self, bound: int, *, degree_one: bool = False) -> list[QuadIdeal]:
        """范数不超过 bound 且与水平互素的素理想"""
        return [
            q for q in prime_ideals(self.pair.field, bound, degree_one=degree_one)
            if self.is_unramified_at(q)
        ]

    def table(self, primes: Iterable[QuadIdeal]) -> list[HeckeEigenvalues]:
        return [self.eigenvalues(q) for q in primes]

    def agrees_with(self, other: "Eigensystem", primes: Iterable[QuadIdeal]) -> bool:
        for q in primes:
            mine, theirs = self.eigenvalues(q), other.eigenvalues(q)
            if mine.a != theirs.a or mine.d != theirs.d:
                logger.debug(f"特征系统在 {q} 处不一致")
                return False
        return True

    def to_csv(self, primes: Iterable[QuadIdeal]) -> str:
        """特征系统表的 CSV 文本，分圆数写作 `order:c0,c1,…`"""
        rows = (
            {
                "prime": str(values.prime),
                "norm": values.prime.norm,
                "a_q": str(values.a),
                "d_q": str(values.d),
            }
            for values in self.table(primes)
        )
        return write_csv(rows, CSV_COLUMNS)
