"""本模块给出特征对在 p 处的四个 p-稳定化及其斜率

p = 𝔭𝔭̄ 分裂且与水平互素，在每个 q | p 处从 Hecke 多项式的两根
α_q = N(q)·φ₂(q)^{−1}、β_q = φ₁(q)^{−1} 中选一个作为 U_q 特征值。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any

from bianchi.arith import CycloNum
from bianchi.characters import CharPair
from bianchi.exception import (
    InsufficientPrecisionError,
    MismatchError,
    PadicError,
    UnsupportedPrimeError,
)
from bianchi.eigensystem import (
    Flavor,
    HeckePolynomial,
    LevelDescriptor,
    TypeTag,
    Weight,
    classify,
    hecke_polynomial,
    predict_dims,
)
from bianchi.log import new_logger
from bianchi.quadfield import QuadIdeal
from bianchi.utils import ReportModel

from .embedding import PadicEmbedding, build_embedding

logger = new_logger("bianchi.padic")


class Root(str, Enum):
    """Hecke 多项式的根"""

    ALPHA = "alpha"
    """α_q = N(q)·φ₂(q)^{−1}"""
    BETA = "beta"
    """β_q = φ₁(q)^{−1}"""


CHOICES = tuple((x, y) for x in Root for y in Root)
"""(x_𝔭, x_𝔭̄) 的四种选择，按 αα、αβ、βα、ββ 排列"""


def stabilization_label(choice: tuple[Root, Root]) -> str:
    return f"{choice[0].value}-{choice[1].value}"


def pair_value_order(pair: CharPair) -> int:
    """特征对全部取值所在的分圆阶"""
    return lcm(
        pair.field.value_order, pair.phi1.eps.order, pair.phi2.eps.order
    )


def pair_embedding(
    pair: CharPair, p: int, prime: QuadIdeal | None = None, precision: int = 32
) -> PadicEmbedding:
    """覆盖特征对全部取值的 p 进嵌入"""
    return build_embedding(pair.field, p, pair_value_order(pair), prime, precision)


@dataclass(frozen=True, slots=True)
class PStabilization:
    """特征对的一个 p-稳定化"""

    pair: CharPair
    p: int
    choice: tuple[Root, Root]
    values: tuple[CycloNum, CycloNum]
    """(x_𝔭, x_𝔭̄)"""
    slopes: tuple[Fraction, Fraction]
    """(v_p(x_𝔭), v_p(x_𝔭̄))"""

    @property
    def label(self) -> str:
        return stabilization_label(self.choice)

    @property
    def ordinary(self) -> bool:
        return self.slopes == (0, 0)

    def to_json(self) -> dict[str, Any]:
        return {
            "choice": self.label,
            "slope_p": str(self.slopes[0]),
            "slope_pbar": str(self.slopes[1]),
            "ordinary": self.ordinary,
            "values": [v.to_json() for v in self.values],
        }


class SlopeReport(ReportModel):
    """四个 p-稳定化的斜率表"""

    field_d: int
    p: int
    prime: str
    """ι_p 对应的 𝔭"""
    tag: str
    weight: list[int] | None
    precision: int
    stabilizations: list[dict[str, Any]]
    ordinary: list[str]
    table_verified: bool | None
    """斜率与类别给出的表一致；类别为 other 时为 None"""


def expected_slopes(tag: TypeTag, weight: Weight) -> dict[tuple[Root, int], int] | None:
    """按类别给出的斜率 {(根, 0 表示 𝔭 / 1 表示 𝔭̄): 斜率}"""
    k1, l1 = weight.k + 1, weight.ell + 1
    match tag.primary:
        case TypeTag.TYPE_A:
            table = {(Root.ALPHA, 0): 0, (Root.BETA, 0): k1, (Root.ALPHA, 1): l1, (Root.BETA, 1): 0}
        case TypeTag.TYPE_B:
            table = {(Root.ALPHA, 0): 0, (Root.BETA, 0): k1, (Root.ALPHA, 1): 0, (Root.BETA, 1): l1}
        case _:
            return None
    if tag is not tag.primary:
        # 对合交换 α 与 β
        swap = {Root.ALPHA: Root.BETA, Root.BETA: Root.ALPHA}
        table = {(swap[r], i): v for (r, i), v in table.items()}
    return table


def _check_prime(pair: CharPair, p: int, emb: PadicEmbedding) -> None:
    if emb.field != pair.field or emb.p != p:
        raise PadicError(f"嵌入 ({emb.field}, p={emb.p}) 与特征对 ({pair.field}, p={p}) 不一致")
    if pair.level.norm % p == 0:
        raise UnsupportedPrimeError(f"p={p} 与水平 {pair.level} 不互素")
    if not emb.covers(pair_value_order(pair)):
        raise PadicError(f"嵌入的阶 {emb.order} 不包含特征对的取值")


def _slope(x: CycloNum, emb: PadicEmbedding) -> Fraction:
    v = emb.valuation(x)
    if not v.exact:
        raise InsufficientPrecisionError(f"精度 {emb.precision} 不足以确定斜率 ({v})")
    return v.value


def stabilize(
    pair: CharPair, p: int, emb: PadicEmbedding | None = None
) -> tuple[list[PStabilization], SlopeReport]:
    """特征对的四个 p-稳定化。

    ### 参数
        pair: 特征对 φ

        p: 分裂且与水平互素的素数

        emb: p 进嵌入，默认用 `pair_embedding` 构造

    ### 返回
        按 αα、αβ、βα、ββ 排列的四个 p-稳定化与斜率报告

    ### 异常
        MismatchError: 斜率与类别给出的表不一致，或常态稳定化不唯一
    """
    emb = emb or pair_embedding(pair, p)
    _check_prime(pair, p, emb)
    primes = (emb.prime, emb.conj_prime)
    polys: list[HeckePolynomial] = [hecke_polynomial(pair, q) for q in primes]
    roots = [{Root.ALPHA: f.alpha, Root.BETA: f.beta} for f in polys]
    slopes = {
        (r, i): _slope(roots[i][r], emb) for i in range(2) for r in Root
    }

    result = [
        PStabilization(
            pair,
            p,
            choice,
            (roots[0][choice[0]], roots[1][choice[1]]),
            (slopes[(choice[0], 0)], slopes[(choice[1], 1)]),
        )
        for choice in CHOICES
    ]

    cls = classify(pair)
    verified = None
    if cls.weight is not None:
        expected = expected_slopes(cls.tag, cls.weight)
        if expected is not None:
            verified = all(slopes[key] == value for key, value in expected.items())
            ordinary = [s for s in result if s.ordinary]
            if not verified or len(ordinary) != 1:
                raise MismatchError(
                    f"{pair} 在 p={p} 处的斜率表与 {cls.tag.value} 不一致",
                    diff={
                        "expected": {f"{r.value}_{i}": v for (r, i), v in expected.items()},
                        "actual": {f"{r.value}_{i}": str(v) for (r, i), v in slopes.items()},
                    },
                )

    logger.opt(colors=True).debug(
        f"{pair} 在 p=<y>{p}</y> 处的常态稳定化: "
        f"<c>{[s.label for s in result if s.ordinary]}</c>"
    )
    report = SlopeReport(
        field_d=pair.field.d,
        p=p,
        prime=str(emb.prime),
        tag=cls.tag.value,
        weight=cls.weight.to_json() if cls.weight else None,
        precision=emb.precision,
        stabilizations=[s.to_json() for s in result],
        ordinary=[s.label for s in result if s.ordinary],
        table_verified=verified,
    )
    return result, report


class EigenvarietyReport(ReportModel):
    """常态稳定化处的维数预测"""

    field_d: int
    p: int
    tag: str
    ordinary: str
    one_dim_degrees: dict[str, list[int]]
    """一维的 (上同调种类, 次数)"""
    etale_at_x: bool
    """权映射在 x 处平展"""
    etale_at_x_c: bool
    """权映射在紧支点 x_c 处平展"""
    rank_one: bool
    """局部环在权代数上秩为 1"""
    critical: list[dict[str, Any]]
    """非常态稳定化，标记为临界斜率"""


def eigenvariety_report(
    pair: CharPair, p: int, emb: PadicEmbedding | None = None
) -> EigenvarietyReport:
    """常态稳定化在完整与紧支上同调中一维的次数，以及由此得到的平展与秩一预测

    ### 异常
        UnsupportedTypeError: 类别不是 TYPE_A、TYPE_B 或其对偶

        ExcludedWeightError: TYPE_B 且权为 (0, 0)
    """
    stabilizations, _ = stabilize(pair, p, emb)
    cls = classify(pair)
    ordinary = next(s for s in stabilizations if s.ordinary)
    assert cls.weight is not None
    dims = predict_dims(
        pair, cls.weight, LevelDescriptor(pair.level, p), stabilization=ordinary.label
    )
    one_dim = {
        flavor.value: [i for i, v in enumerate(dims.get(flavor) or []) if v == 1]
        for flavor in (Flavor.FULL, Flavor.COMPACT)
    }
    etale = sum(dims.get(Flavor.FULL) or []) == 1
    etale_c = sum(dims.get(Flavor.COMPACT) or []) == 1
    return EigenvarietyReport(
        field_d=pair.field.d,
        p=p,
        tag=cls.tag.value,
        ordinary=ordinary.label,
        one_dim_degrees=one_dim,
        etale_at_x=etale,
        etale_at_x_c=etale_c,
        rank_one=etale and etale_c,
        critical=[
            {**s.to_json(), "critical_slope": True}
            for s in stabilizations
            if not s.ordinary
        ],
    )
