"""本模块对双参数 Eisenstein 族做同余检验

TYPE_B 特征对 φ 的 φ₁ 在 k 方向（或 ℓ 方向）平移 Δ = t·p^m·lcm(p − 1, w) 后仍是 Hecke 特征，
且对与 p·n 互素的素理想 q 有 a_q(φ^{(Δ)}) ≡ a_q(φ) mod p^{m+1}。
"""

from collections.abc import Sequence
from dataclasses import dataclass
from math import lcm
from typing import Any, Literal

from bianchi.characters import CharPair
from bianchi.exception import (
    InfiniteValuationError,
    InsufficientPrecisionError,
    PadicError,
    UnsupportedPrimeError,
    UnsupportedTypeError,
)
from bianchi.eigensystem import HeckeEigenvalues, TypeTag, classify, eis_eigensystem
from bianchi.log import new_logger
from bianchi.quadfield import QuadIdeal, is_prime_ideal
from bianchi.utils import ReportModel

from .embedding import PadicEmbedding
from .stabilize import pair_embedding, pair_value_order

logger = new_logger("bianchi.padic")

type Direction = Literal["k", "ell"]


def family_shift(p: int, w: int, m: int, t: int) -> int:
    """Δ = t·p^m·lcm(p − 1, w)"""
    if m < 0:
        raise PadicError(f"m 必须非负: {m}")
    return t * p**m * lcm(p - 1, w)


def twist_pair(pair: CharPair, delta: int, direction: Direction = "k") -> CharPair:
    """φ^{(Δ)}：φ₁ 的无穷型平移 (Δ, 0) 或 (0, Δ)，有限部分不变"""
    shift = (delta, 0) if direction == "k" else (0, delta)
    return CharPair(pair.phi1.shift_type(*shift), pair.phi2)


@dataclass(frozen=True, slots=True)
class CongruenceWitness:
    """单个素理想处的同余检验结果"""

    prime: QuadIdeal
    delta: int
    valuation: str
    """v_p(ι(a_q(φ^{(Δ)})) − ι(a_q(φ)))，差为 0 时为 `inf`"""
    holds: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "prime": self.prime.to_json(),
            "delta": self.delta,
            "valuation": self.valuation,
            "holds": self.holds,
        }


class CongruenceReport(ReportModel):
    """族同余检验报告"""

    field_d: int
    p: int
    m: int
    t: int
    delta: int
    direction: str
    precision: int
    required: int
    """要求的赋值下界 m + 1"""
    witnesses: list[dict[str, Any]]
    holds: bool


def _a_q(pair: CharPair, prime: QuadIdeal) -> HeckeEigenvalues:
    values = eis_eigensystem(pair, prime)
    if not isinstance(values, HeckeEigenvalues):
        raise UnsupportedPrimeError(f"{prime} 整除水平 {pair.level}")
    return values


def family_congruence(
    pair: CharPair,
    prime: QuadIdeal,
    m: int,
    t: int,
    emb: PadicEmbedding,
    *,
    direction: Direction = "k",
) -> CongruenceWitness:
    """检验 a_q(φ^{(Δ)}) ≡ a_q(φ) mod p^{m+1}。

    ### 参数
        pair: TYPE_B 特征对 φ

        prime: 与 p·n 互素的素理想 q

        m: p 的幂次

        t: 非零整数

        emb: p 进嵌入

        direction: 平移方向，`k` 或 `ell`

    ### 异常
        UnsupportedTypeError: φ 不是 TYPE_B

        InsufficientPrecisionError: 精度 N ≤ m + 1
    """
    if classify(pair).tag is not TypeTag.TYPE_B:
        raise UnsupportedTypeError(f"族同余只对 TYPE_B 特征对定义: {pair.infinity_types}")
    if emb.precision <= m + 1:
        raise InsufficientPrecisionError(
            f"精度 {emb.precision} 不足以检验模 p^{m + 1} 的同余"
        )
    p = emb.p
    if not is_prime_ideal(prime) or prime.norm % p == 0:
        raise UnsupportedPrimeError(f"{prime} 必须是与 p={p} 互素的素理想")
    delta = family_shift(p, pair.field.w, m, t)
    twisted = twist_pair(pair, delta, direction)
    difference = _a_q(twisted, prime).a - _a_q(pair, prime).a
    try:
        v = emb.valuation(difference)
    except InfiniteValuationError:
        return CongruenceWitness(prime, delta, "inf", True)
    return CongruenceWitness(prime, delta, str(v), v.at_least(m + 1))


def family_congruence_report(
    pair: CharPair,
    primes: Sequence[QuadIdeal],
    p: int,
    m: int,
    t: int,
    *,
    emb: PadicEmbedding | None = None,
    precision: int = 32,
    direction: Direction = "k",
) -> CongruenceReport:
    """对一组素理想做族同余检验，与 p·n 不互素的素理想被跳过"""
    emb = emb or pair_embedding(pair, p, precision=precision)
    if not emb.covers(pair_value_order(pair)):
        raise UnsupportedPrimeError(f"嵌入的阶 {emb.order} 不包含特征对的取值")
    usable = [q for q in primes if q.norm % p and q.is_coprime(pair.level)]
    witnesses = [
        family_congruence(pair, q, m, t, emb, direction=direction) for q in usable
    ]
    holds = all(w.holds for w in witnesses)
    if not holds:
        failed = [str(w.prime) for w in witnesses if not w.holds]
        logger.warning(f"族同余在 {failed} 处失败")
    return CongruenceReport(
        field_d=pair.field.d,
        p=p,
        m=m,
        t=t,
        delta=family_shift(p, pair.field.w, m, t),
        direction=direction,
        precision=emb.precision,
        required=m + 1,
        witnesses=[w.to_json() for w in witnesses],
        holds=holds,
    )
