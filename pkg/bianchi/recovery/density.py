"""本模块统计样本素理想对射线类的覆盖

有限样本无法检验 Dirichlet 密度，这里用其有限形式代替：
样本素理想落入的射线类个数严格超过射线类总数的一半。
"""

from collections.abc import Sequence
from fractions import Fraction

from bianchi.characters import CharPair, ray_classes
from bianchi.log import new_logger
from bianchi.quadfield import QuadField, QuadIdeal, prime_ideals
from bianchi.utils import ReportModel

from .samples import SampleSet

logger = new_logger("bianchi.recovery")

PROXY_NOTE = "有限代理：样本覆盖的射线类个数严格超过总数的一半，不涉及 Dirichlet 密度"

DENSITY_LIMIT = 20_000
"""逐次加倍样本范数上限时的最大值"""


class DensityReport(ReportModel):
    """射线类覆盖报告"""

    field_d: int
    modulus: str
    total: int
    """射线类个数 t"""
    covered: int
    """被样本命中的射线类个数"""
    proportion: str
    exceeds_half: bool
    """proportion > 1/2"""
    skipped: int
    """与模不互素而被跳过的样本个数"""
    sample_bound: int | None = None
    """样本素理想的范数上限，由 `sufficient_density` 填写"""
    note: str = PROXY_NOTE


def density_modulus(pair: CharPair) -> QuadIdeal:
    """f = n·f₁·f₂，对 {φ, φ′} 而言 f₁·f₂ = n"""
    return pair.level * pair.level


def _coverage(
    field: QuadField,
    primes: Sequence[QuadIdeal],
    modulus: QuadIdeal,
    sample_bound: int | None = None,
) -> DensityReport:
    group = ray_classes(field, modulus)
    usable = [q for q in primes if q.is_coprime(modulus)]
    proportion = group.coverage(usable)
    return DensityReport(
        field_d=field.d,
        modulus=str(modulus),
        total=group.size,
        covered=int(proportion * group.size),
        proportion=str(proportion),
        exceeds_half=proportion > Fraction(1, 2),
        skipped=len(primes) - len(usable),
        sample_bound=sample_bound,
    )


def density_report(samples: SampleSet, modulus: QuadIdeal) -> DensityReport:
    """样本素理想对 Cl_K(f) 的覆盖。

    ### 参数
        samples: 样本集 S

        modulus: 射线类群的模 f
    """
    report = _coverage(samples.field, samples.primes(), modulus)
    if report.skipped:
        logger.warning(f"跳过 {report.skipped} 个与 {modulus} 不互素的样本素理想")
    return report


def sufficient_density(
    pair: CharPair,
    modulus: QuadIdeal | None = None,
    *,
    start: int = 200,
    limit: int = DENSITY_LIMIT,
) -> DensityReport:
    """从 start 起逐次加倍一次素理想的范数上限，直到覆盖严格超过一半。

    ### 参数
        pair: 特征对，样本取与其水平互素的一次素理想

        modulus: 射线类群的模，默认 `density_modulus(pair)`

        start: 初始范数上限

        limit: 范数上限的最大值

    ### 返回
        第一个覆盖超过一半的范数上限处的报告；到达 limit 仍未超过时返回 limit 处的报告
    """
    modulus = modulus or density_modulus(pair)
    bound = min(start, limit)
    while True:
        primes = [
            q for q in prime_ideals(pair.field, bound, degree_one=True)
            if q.is_coprime(pair.level)
        ]
        report = _coverage(pair.field, primes, modulus, sample_bound=bound)
        logger.opt(colors=True).debug(
            f"范数上限 <y>{bound}</y>: 覆盖 <c>{report.covered}/{report.total}</c>"
        )
        if report.exceeds_half or bound >= limit:
            break
        bound = min(2 * bound, limit)
    if not report.exceeds_half:
        logger.warning(f"范数上限 {limit} 处 {modulus} 的覆盖仍未超过一半")
    return report
