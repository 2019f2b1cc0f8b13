"""本模块把 f 的 p-稳定化 f^α、f^β 与基变换特征对的四个 p-稳定化对应起来"""

from fractions import Fraction
from typing import Any

from bianchi.arith import CycloNum
from bianchi.eigensystem import hecke_polynomial
from bianchi.exception import BaseChangeError, InsufficientPrecisionError, MismatchError
from bianchi.log import new_logger
from bianchi.padic import (
    PadicEmbedding,
    Root,
    pair_embedding,
    stabilization_label,
    stabilize,
)
from bianchi.utils import ReportModel

from .lift import bc_pair
from .theta import BaseChangeInput

logger = new_logger("bianchi.basechange")

GREEK = {"alpha": "α", "beta": "β"}


def classical_label(first: str, second: str) -> str:
    """F^{αβ} 形式的标签"""
    return f"F^{{{GREEK[first]}{GREEK[second]}}}"


def _slope(x: CycloNum, emb: PadicEmbedding) -> Fraction:
    v = emb.valuation(x)
    if not v.exact:
        raise InsufficientPrecisionError(f"精度 {emb.precision} 不足以确定斜率 ({v})")
    return v.value


class BcStabilizationReport(ReportModel):
    """基变换的 p-稳定化报告"""

    input: dict[str, Any]
    p: int
    prime: str
    alpha: dict[str, Any]
    """α = φ(𝔭̄)"""
    beta: dict[str, Any]
    """β = φ(𝔭)"""
    slope_alpha: str
    slope_beta: str
    vieta: bool
    """α + β = a_𝔭"""
    stabilizations: list[dict[str, Any]]
    ordinary: str


def bc_stabilizations(
    inp: BaseChangeInput, p: int, emb: PadicEmbedding | None = None
) -> BcStabilizationReport:
    """f 在 p 处的两根 α = φ(𝔭̄)、β = φ(𝔭) 以及基变换的四个 p-稳定化。

    ### 参数
        inp: 基变换输入

        p: 分裂且与导子互素的素数

        emb: p 进嵌入，默认覆盖 bc_pair 的全部取值

    ### 异常
        BaseChangeError: p 整除导子的范数

        MismatchError: α、β 与特征系统的两根不符，或 F^{αα} 不是唯一的常态稳定化，
            或 F^{ββ} 的斜率不是 (k+1, k+1)
    """
    phi = inp.phi
    if inp.M % p == 0:
        raise BaseChangeError(f"p={p} 整除导子 {phi.conductor} 的范数")
    pair = bc_pair(phi)
    emb = emb or pair_embedding(pair, p)
    stabilizations, _ = stabilize(pair, p, emb)
    primes = (emb.prime, emb.conj_prime)
    alpha, beta = phi(emb.conj_prime), phi(emb.prime)

    # f 的两根在每个 p 之上的素理想处对应的 Hecke 多项式的根
    sides: list[dict[str, Root]] = []
    vieta = True
    for q in primes:
        poly = hecke_polynomial(pair, q)
        roots = {Root.ALPHA: poly.alpha, Root.BETA: poly.beta}
        side = {
            name: next((r for r, v in roots.items() if v == value), None)
            for name, value in (("alpha", alpha), ("beta", beta))
        }
        if None in side.values() or side["alpha"] == side["beta"]:
            raise MismatchError(
                f"{q} 处 α、β 与 Hecke 多项式的根不符",
                diff={"prime": str(q), "roots": {r.value: v.to_json() for r, v in roots.items()}},
            )
        vieta = vieta and alpha + beta == poly.a
        sides.append(side)  # type: ignore[arg-type]

    by_choice = {s.choice: s for s in stabilizations}
    rows = []
    for first, second in (("alpha", "alpha"), ("alpha", "beta"), ("beta", "alpha"), ("beta", "beta")):
        choice = (sides[0][first], sides[1][second])
        stab = by_choice[choice]
        rows.append(
            {
                "label": classical_label(first, second),
                "choice": stabilization_label(choice),
                "slope_p": str(stab.slopes[0]),
                "slope_pbar": str(stab.slopes[1]),
                "ordinary": stab.ordinary,
            }
        )

    k1 = str(inp.k + 1)
    ordinary = [row["label"] for row in rows if row["ordinary"]]
    top = rows[-1]
    if ordinary != [rows[0]["label"]] or (top["slope_p"], top["slope_pbar"]) != (k1, k1):
        raise MismatchError(
            f"{phi} 在 p={p} 处的稳定化斜率与 F^{{αα}}、F^{{ββ}} 的预期不符",
            diff={"ordinary": ordinary, "beta_beta": [top["slope_p"], top["slope_pbar"]]},
        )
    logger.opt(colors=True).debug(
        f"基变换在 p=<y>{p}</y> 处 α={alpha}，β={beta}"
    )
    return BcStabilizationReport(
        input=inp.to_json(),
        p=p,
        prime=str(emb.prime),
        alpha=alpha.to_json(),
        beta=beta.to_json(),
        slope_alpha=str(_slope(alpha, emb)),
        slope_beta=str(_slope(beta, emb)),
        vieta=vieta,
        stabilizations=rows,
        ordinary=ordinary[0],
    )
