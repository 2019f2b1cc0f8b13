"""本模块给出特征对所在广义特征空间的上同调维数

预测值来自 Eisenstein 上同调的维数表；穷举值在特征一侧计算边界上同调：
H⁰ 对 TYPE_B_DUAL 求和，H¹ 对 TYPE_A 求和（每项贡献 V_χ ⊕ V_χ′），H² 对 TYPE_B 求和，
保留在样本素理想上特征值与目标完全一致的特征对，并乘以局部不变向量的维数。
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Any

from pydantic import Field, validator

from bianchi.arith import CycloNum
from bianchi.characters import CharPair, chars_of_conductor
from bianchi.exception import (
    EigensystemError,
    ExcludedWeightError,
    MismatchError,
    UnsupportedPrimeError,
    UnsupportedTypeError,
)
from bianchi.log import new_logger
from bianchi.quadfield import (
    QuadIdeal,
    SplitKind,
    divisors,
    factor_ideal,
    ideal_valuation,
    split_prime,
)
from bianchi.utils import ReportModel, parallel_map

from .eigen import HeckeEigenvalues, eis_eigensystem, iwahori_u_eigenvalues
from .local import local_invariant_dim
from .types import TypeTag, Weight, classify, pair_type

logger = new_logger("bianchi.eigensystem")

DEGREES = 4


class Flavor(str, Enum):
    """上同调的种类"""

    BOUNDARY = "boundary"
    EISENSTEIN = "eisenstein"
    FULL = "full"
    COMPACT = "compact"


class DimMode(str, Enum):
    PREDICTED = "predicted"
    BRUTEFORCED = "bruteforced"


@dataclass(frozen=True, slots=True)
class LevelDescriptor:
    """水平 K₁(n) 或 K₁(n, p)"""

    n: QuadIdeal
    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is None:
            return
        splitting = split_prime(self.n.field, self.p)
        if splitting.kind is not SplitKind.SPLIT:
            raise UnsupportedPrimeError(f"p={self.p} 在 {self.n.field} 中{splitting.kind.value}，要求分裂")
        if self.n.norm % self.p == 0:
            raise UnsupportedPrimeError(f"p={self.p} 整除水平 {self.n}")

    @property
    def extra_primes(self) -> tuple[QuadIdeal, ...]:
        if self.p is None:
            return ()
        return split_prime(self.n.field, self.p).primes

    def __str__(self) -> str:
        if self.p is None:
            return f"K1({self.n})"
        return f"K1({self.n},{self.p})"


class DimReport(ReportModel):
    """各类上同调在 0–3 次的维数"""

    level: str
    weight: tuple[int, int]
    mode: DimMode
    tag: str
    dims: dict[str, list[int]]
    flags: dict[str, Any] = Field(default_factory=dict)

    @validator("dims")
    def check_dims(cls, value: dict[str, list[int]]) -> dict[str, list[int]]:
        for flavor, entries in value.items():
            if len(entries) != DEGREES or any(e < 0 for e in entries):
                raise ValueError(f"{flavor} 的维数必须是 4 个非负整数: {entries}")
        if value.get(Flavor.BOUNDARY.value, [0] * DEGREES)[3]:
            raise ValueError("边界上同调的 3 次维数必须为 0")
        return value

    def get(self, flavor: Flavor) -> list[int] | None:
        return self.dims.get(flavor.value)

    def alternating_sum(self) -> int:
        """Σ(−1)^i (dim H_c^i − dim H^i + dim H_∂^i)"""
        boundary, full, compact = (
            self.get(f) for f in (Flavor.BOUNDARY, Flavor.FULL, Flavor.COMPACT)
        )
        if boundary is None or full is None or compact is None:
            raise EigensystemError("交错和需要边界、完整与紧支上同调的维数")
        return sum(
            (-1) ** i * (compact[i] - full[i] + boundary[i]) for i in range(DEGREES)
        )

    def check_exactness(self) -> bool:
        return self.alternating_sum() == 0


_TABLES: dict[TypeTag, dict[Flavor, list[int]]] = {
    TypeTag.TYPE_A: {
        Flavor.BOUNDARY: [0, 2, 0, 0],
        Flavor.EISENSTEIN: [0, 1, 0, 0],
        Flavor.FULL: [0, 1, 0, 0],
        Flavor.COMPACT: [0, 0, 1, 0],
    },
    TypeTag.TYPE_B: {
        Flavor.BOUNDARY: [1, 0, 1, 0],
        Flavor.EISENSTEIN: [0, 0, 1, 0],
        Flavor.FULL: [0, 0, 1, 0],
        Flavor.COMPACT: [0, 1, 0, 0],
    },
}


def predict_dims(
    pair: CharPair,
    weight: Weight,
    level: LevelDescriptor,
    stabilization: str | None = None,
) -> DimReport:
    """预测各类上同调的维数。

    ### 参数
        pair: 特征对 φ

        weight: 权 (k, ℓ)，必须与 φ 的无穷型一致

        level: K₁(n) 或 K₁(n, p)

        stabilization: K₁(n, p) 时选定的 p-稳定化标签，为 None 时报告四个稳定化之和

    ### 异常
        UnsupportedTypeError: 无穷型不属于 TYPE_A、TYPE_B 及其对偶

        ExcludedWeightError: TYPE_B 且权为 (0, 0)
    """
    cls = classify(pair)
    if cls.tag is TypeTag.OTHER or cls.weight is None:
        raise UnsupportedTypeError(f"无穷型 {pair.infinity_types} 不受支持")
    if cls.weight != weight:
        raise EigensystemError(f"权 {weight} 与特征对的无穷型 {pair.infinity_types} 不一致")
    primary = cls.tag.primary
    if primary is TypeTag.TYPE_B and weight.is_trivial():
        raise ExcludedWeightError("TYPE_B 且权为 (0,0) 的情形不在定理范围内")

    multiplier = 4 if level.p is not None and stabilization is None else 1
    dims = {
        f.value: [e * multiplier for e in entries]
        for f, entries in _TABLES[primary].items()
    }

    derived = ["eisenstein[0]", "eisenstein[3]"]
    if weight.is_trivial():
        derived += ["full[0]", "full[3]", "compact[0]", "compact[3]"]
    flags = {
        "derived_from_proof": derived,
        "cuspidal_assumption": weight.is_parallel(),
        "via_involution": cls.tag is not primary,
        "stabilization": stabilization,
    }
    return DimReport(
        level=str(level),
        weight=(weight.k, weight.ell),
        mode=DimMode.PREDICTED,
        tag=cls.tag.value,
        dims=dims,
        flags=flags,
    )


type SampleTable = tuple[tuple[QuadIdeal, CycloNum, CycloNum], ...]


def _matches(job: tuple[CharPair, SampleTable]) -> bool:
    candidate, table = job
    for q, a, d in table:
        values = eis_eigensystem(candidate, q)
        if not isinstance(values, HeckeEigenvalues) or values.a != a or values.d != d:
            return False
    return True


def _local_factor(candidate: CharPair, level: LevelDescriptor) -> int:
    n = level.n
    result = 1
    for q, e in factor_ideal(n):
        result *= local_invariant_dim(
            ideal_valuation(candidate.n1, q), ideal_valuation(candidate.n2, q), e
        )
    return result


def _iwahori_factor(
    candidate: CharPair,
    level: LevelDescriptor,
    stabilization: Mapping[QuadIdeal, CycloNum] | None,
) -> int:
    result = 1
    for r in level.extra_primes:
        if stabilization is None:
            result *= local_invariant_dim(0, 0, 0, iwahori_extra=True)
        else:
            roots = iwahori_u_eigenvalues(candidate, r)
            result *= sum(1 for x in roots if x == stabilization[r])
    return result


def candidate_pairs(
    level: QuadIdeal, types: tuple[tuple[int, int], tuple[int, int]]
) -> list[CharPair]:
    """无穷型给定、导子乘积整除水平的全部本原特征对"""
    field = level.field
    result = []
    for g1 in divisors(level):
        for g2 in divisors(level):
            if not g1.is_coprime(g2) or not (g1 * g2).divides(level):
                continue
            for chi1 in chars_of_conductor(field, g1, types[0]):
                for chi2 in chars_of_conductor(field, g2, types[1]):
                    result.append(CharPair(chi1, chi2))
    return result


def boundary_dims_bruteforce(
    pair: CharPair,
    weight: Weight,
    level: LevelDescriptor,
    samples: Sequence[QuadIdeal],
    *,
    stabilization: Mapping[QuadIdeal, CycloNum] | None = None,
    workers: int = 1,
) -> DimReport:
    """在特征一侧穷举边界上同调的维数。

    ### 参数
        pair: 目标特征对 φ

        weight: 权 (k, ℓ)

        level: K₁(n) 或 K₁(n, p)

        samples: 比较特征值的素理想集合 S，与水平不互素者会被跳过

        stabilization: K₁(n, p) 时 p 之上每个素理想选定的 U 特征值

        workers: 并行进程数
    """
    if not pair.level.divides(level.n):
        raise EigensystemError(f"特征对的水平 {pair.level} 不整除 {level.n}")
    extra = level.extra_primes
    usable = [
        q for q in samples
        if q.is_coprime(level.n) and q not in extra and q.is_coprime(pair.level)
    ]
    skipped = len(samples) - len(usable)
    if skipped:
        logger.warning(f"跳过 {skipped} 个与水平不互素的样本素理想")
    table: list[tuple[QuadIdeal, CycloNum, CycloNum]] = []
    for q in usable:
        values = eis_eigensystem(pair, q)
        assert isinstance(values, HeckeEigenvalues)
        table.append((q, values.a, values.d))
    frozen_table = tuple(table)

    boundary = [0] * DEGREES
    examined = 0
    for degree, tag, copies in (
        (0, TypeTag.TYPE_B_DUAL, 1),
        (1, TypeTag.TYPE_A, 2),
        (2, TypeTag.TYPE_B, 1),
    ):
        candidates = candidate_pairs(level.n, pair_type(tag, weight))
        examined += len(candidates)
        matched = parallel_map(
            _matches, [(c, frozen_table) for c in candidates], workers=workers
        )
        for candidate, ok in zip(candidates, matched):
            if ok:
                boundary[degree] += (
                    copies
                    * _local_factor(candidate, level)
                    * _iwahori_factor(candidate, level, stabilization)
                )
        logger.opt(colors=True).debug(
            f"{tag.value}: 候选 <c>{len(candidates)}</c> 个, 匹配 <y>{sum(matched)}</y> 个"
        )

    cls = classify(pair)
    return DimReport(
        level=str(level),
        weight=(weight.k, weight.ell),
        mode=DimMode.BRUTEFORCED,
        tag=cls.tag.value,
        dims={Flavor.BOUNDARY.value: boundary},
        flags={
            "samples": len(usable),
            "skipped_samples": skipped,
            "candidates": examined,
            "stabilization": (
                {str(q): v.to_json() for q, v in stabilization.items()}
                if stabilization
                else None
            ),
        },
    )


def compare_boundary(predicted: DimReport, bruteforced: DimReport) -> None:
    """比较两份报告的边界维数

    ### 异常
        MismatchError: 维数不一致，异常中附带差异
    """
    expected = predicted.get(Flavor.BOUNDARY)
    actual = bruteforced.get(Flavor.BOUNDARY)
    if expected != actual:
        raise MismatchError(
            f"边界上同调维数不一致: 预测 {expected}，穷举 {actual}",
            diff={"predicted": expected, "bruteforced": actual},
        )
