"""本模块实现了 Q(ζ_L) 到非分歧 p 进环的嵌入 ι_p

取第 L 个分圆多项式模 p 的一个不可约因子并 Hensel 提升到精度 N，ζ_L 映到提升后的根。
因子按系数字典序从小到大尝试，选取第一个使 v(ι(𝔭 的生成元)) > 0 的因子，
于是 ι_p 对应选定的 𝔭，而 𝔭̄ 的生成元是 p 进单位。
"""

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Any

from sympy import ZZ, Poly, Symbol, cyclotomic_poly
from sympy.polys.factortools import dup_zz_hensel_lift

from bianchi.arith import CycloNum
from bianchi.config import limit_config
from bianchi.exception import (
    InfiniteValuationError,
    PadicError,
    PrecisionError,
    RamifiedEmbeddingError,
    UnsupportedPrimeError,
)
from bianchi.log import new_logger
from bianchi.quadfield import QuadField, QuadIdeal, SplitKind, canonical_generator, split_prime

from .number import PadicNum, Valuation

logger = new_logger("bianchi.padic")

_x = Symbol("x")


@lru_cache(maxsize=128)
def _lifted_factors(
    p: int, order: int, precision: int
) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    # ((模 p 因子, 提升后的因子), …)，均为首一、低次在前，按模 p 因子的字典序排列
    phi = Poly(cyclotomic_poly(order, _x), _x)
    _, factors = Poly(phi.as_expr(), _x, modulus=p).factor_list()
    residues = sorted(
        [int(c) % p for c in f.all_coeffs()] for f, _ in factors
    )
    lifted = dup_zz_hensel_lift(
        ZZ(p),
        [ZZ(int(c)) for c in phi.all_coeffs()],
        [[ZZ(c) for c in r] for r in residues],
        precision,
        ZZ,
    )
    mod = p**precision
    return tuple(
        (
            tuple(reversed(r)),
            tuple(int(c) % mod for c in reversed(g)),
        )
        for r, g in zip(residues, lifted)
    )


@dataclass(frozen=True, slots=True)
class PadicEmbedding:
    """ι_p: Q(ζ_L) → Z_p[x]/(g)"""

    field: QuadField
    p: int
    order: int
    """目标分圆阶 L"""
    prime: QuadIdeal
    """ι_p 对应的 p 之上的素理想 𝔭"""
    precision: int
    """p 进精度 N"""
    residue_factor: tuple[int, ...]
    """Φ_L 模 p 的不可约因子"""
    modulus: tuple[int, ...]
    """该因子提升到模 p^N 的首一多项式 g"""

    @property
    def unram_degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def conj_prime(self) -> QuadIdeal:
        return self.prime.conj()

    def covers(self, order: int) -> bool:
        return self.order % order == 0

    def embed(self, x: CycloNum) -> PadicNum:
        """ι_p(x)

        ### 异常
            PadicError: x 的分圆阶不整除 L

            InfiniteValuationError: x = 0
        """
        if not self.covers(x.order):
            raise PadicError(f"分圆阶 {x.order} 不整除嵌入的阶 {self.order}")
        if x.is_zero():
            raise InfiniteValuationError("0 的赋值为无穷")
        coeffs = list(x.coerce(self.order).coeffs)
        return PadicNum.from_rationals(self.p, self.modulus, coeffs, self.precision)

    def valuation(self, x: CycloNum) -> Valuation:
        return valuation(x, self)

    def to_json(self) -> dict[str, Any]:
        return {
            "field_d": self.field.d,
            "p": self.p,
            "order": self.order,
            "prime": self.prime.to_json(),
            "precision": self.precision,
            "residue_factor": list(self.residue_factor),
        }


def valuation(x: CycloNum, emb: PadicEmbedding) -> Valuation:
    """v_p(ι_p(x))，v_p(p) = 1。

    ### 参数
        x: 分圆阶整除 L 的非零分圆数

        emb: p 进嵌入

    ### 返回
        赋值；在精度 N 内无法与 0 区分时返回下界

    ### 异常
        InfiniteValuationError: x = 0
    """
    return emb.embed(x).valuation()


def build_embedding(
    field: QuadField,
    p: int,
    order: int,
    prime: QuadIdeal | None = None,
    precision: int = 32,
) -> PadicEmbedding:
    """构造 p 进嵌入。

    ### 参数
        field: 虚二次域 K

        p: 在 K 中分裂的素数

        order: 目标分圆阶 L，会自动扩大为 D 的倍数以包含 K

        prime: ι_p 对应的 p 之上的素理想，默认为标准顺序中的第一个

        precision: p 进精度 N

    ### 异常
        UnsupportedPrimeError: p 在 K 中惰性或分歧

        RamifiedEmbeddingError: p | L

        PrecisionError: N 超出上限
    """
    if not 1 <= precision <= limit_config.max_precision:
        raise PrecisionError(
            f"p 进精度 {precision} 不在 1..{limit_config.max_precision} 内"
        )
    splitting = split_prime(field, p)
    if splitting.kind is not SplitKind.SPLIT:
        raise UnsupportedPrimeError(f"p={p} 在 {field} 中{splitting.kind.value}，要求分裂")
    order = lcm(order, field.D)
    if order % p == 0:
        raise RamifiedEmbeddingError(f"p={p} 整除分圆阶 {order}，嵌入分歧")
    prime = prime or splitting.primes[0]
    if prime not in splitting.primes:
        raise UnsupportedPrimeError(f"{prime} 不是 p={p} 之上的素理想")

    generator = canonical_generator(prime).to_cyclo()
    co_generator = canonical_generator(prime.conj()).to_cyclo()
    for residue, modulus in _lifted_factors(p, order, precision):
        emb = PadicEmbedding(field, p, order, prime, precision, residue, modulus)
        if not emb.valuation(generator).at_least(1):
            continue
        if emb.valuation(co_generator) != Valuation(0):
            continue
        logger.opt(colors=True).debug(
            f"p=<y>{p}</y> 嵌入 Q(ζ_{order}): 因子 <c>{list(residue)}</c>，对应 {prime}"
        )
        return emb
    raise PadicError(f"Φ_{order} 模 {p} 的因子中没有与 {prime} 相容的选择")
