"""本模块由特征值样本反推特征对

在导子范数乘积不超过 B、无穷型属于允许集合的全部本原特征对中，
保留在每个样本素理想上 (a_q, d_q) 完全一致者。对返回的每个候选 χ，
记录样本处 χ₁(q)^{−1} 等于参照特征对的 φ₁(q)^{−1} 还是 N(q)·φ₂(q)^{−1}。
"""

from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from bianchi.characters import CharPair, chars_of_conductor, eval_char
from bianchi.eigensystem import (
    ADMISSIBLE_TAGS,
    HeckeEigenvalues,
    PairType,
    TypeTag,
    Weight,
    classify,
    eis_eigensystem,
    involution,
    pair_type,
)
from bianchi.exception import RecoveryError
from bianchi.log import new_logger
from bianchi.quadfield import QuadField, QuadIdeal
from bianchi.utils import ReportModel, parallel_map

from .samples import Sample, SampleSet

logger = new_logger("bianchi.recovery")


class Branch(str, Enum):
    """χ₁(q)^{−1} 所在的根"""

    PHI1 = "phi1"
    """χ₁(q)^{−1} = φ₁(q)^{−1}"""
    N_PHI2 = "n_phi2"
    """χ₁(q)^{−1} = N(q)·φ₂(q)^{−1}"""
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True, slots=True)
class SearchSpace:
    """候选特征对的搜索范围"""

    bound: int
    """导子范数乘积上限 B"""
    weight: Weight
    tags: tuple[TypeTag, ...] = ADMISSIBLE_TAGS
    extra_types: tuple[PairType, ...] = ()
    """额外允许的无穷型对"""
    bypass_weight_guard: bool = False
    """保留 (k₁, ℓ₁) = (k₂ + 1, ℓ₂ + 1) 的无穷型对"""

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise RecoveryError(f"导子范数上限必须为正: {self.bound}")

    def pair_types(self) -> list[PairType]:
        types = [pair_type(tag, self.weight) for tag in self.tags if tag is not TypeTag.OTHER]
        types.extend(t for t in self.extra_types if t not in types)
        return types


def violates_weight_guard(types: PairType) -> bool:
    """无穷型满足 (k₁, ℓ₁) = (k₂ + 1, ℓ₂ + 1) 时两个根的无穷型相同，分支无法区分"""
    (a1, b1), (a2, b2) = types
    return (a1, b1) == (a2 + 1, b2 + 1)


@dataclass(frozen=True, slots=True)
class Candidate:
    """与全部样本一致的特征对"""

    pair: CharPair
    branches: dict[str, Branch] | None = field(default=None, hash=False)
    """样本素理想 → 分支；没有参照特征对时为 None"""

    @property
    def consistent(self) -> bool | None:
        """全部一次样本处落在同一分支"""
        if self.branches is None:
            return None
        kinds = {b for b in self.branches.values() if b is not Branch.BOTH}
        return len(kinds) <= 1 and Branch.NEITHER not in kinds

    def to_json(self) -> dict[str, Any]:
        return {
            "pair": self.pair.to_json(),
            "tag": classify(self.pair).tag.value,
            "branches": (
                {q: b.value for q, b in self.branches.items()}
                if self.branches is not None
                else None
            ),
            "consistent": self.consistent,
        }


def search_candidates(
    field: QuadField, space: SearchSpace
) -> tuple[list[CharPair], int]:
    """搜索范围内的全部候选特征对，以及被权条件排除的无穷型对个数"""
    ideals = QuadIdeal.up_to(field, space.bound)
    types = space.pair_types()
    allowed = [t for t in types if space.bypass_weight_guard or not violates_weight_guard(t)]
    guarded = len(types) - len(allowed)
    result: list[CharPair] = []
    for g1 in ideals:
        for g2 in ideals:
            if g1.norm * g2.norm > space.bound or not g1.is_coprime(g2):
                continue
            for t1, t2 in allowed:
                for chi1 in chars_of_conductor(field, g1, t1):
                    for chi2 in chars_of_conductor(field, g2, t2):
                        result.append(CharPair(chi1, chi2))
    result = sorted(set(result), key=lambda c: c.sort_key)
    return result, guarded


def _agrees(job: tuple[CharPair, tuple[Sample, ...]]) -> bool:
    candidate, samples = job
    for sample in samples:
        values = eis_eigensystem(candidate, sample.prime)
        if not isinstance(values, HeckeEigenvalues):
            return False
        if values.a != sample.a or values.d != sample.d:
            return False
    return True


def branch_of(candidate: CharPair, reference: CharPair, prime: QuadIdeal) -> Branch:
    value = eval_char(candidate.phi1, prime).inv()
    beta = eval_char(reference.phi1, prime).inv()
    alpha = eval_char(reference.phi2, prime).inv() * prime.norm
    match value == beta, value == alpha:
        case True, True:
            return Branch.BOTH
        case True, False:
            return Branch.PHI1
        case False, True:
            return Branch.N_PHI2
        case _:
            return Branch.NEITHER


def recover_chars(
    samples: SampleSet,
    space: SearchSpace,
    *,
    reference: CharPair | None = None,
    workers: int = 1,
) -> list[Candidate]:
    """与全部样本完全一致的特征对。

    ### 参数
        samples: 样本集 S

        space: 搜索范围

        reference: 分支诊断的参照特征对，默认为样本的来源

        workers: 并行进程数

    ### 返回
        按标准顺序排列的候选

    ### 异常
        EmptySampleError: 样本集为空

        GroupBoundError: 剩余类单位群超出上限
    """
    samples.require_nonempty()
    candidates, guarded = search_candidates(samples.field, space)
    frozen = tuple(samples)
    matched = parallel_map(_agrees, [(c, frozen) for c in candidates], workers=workers)
    reference = reference or samples.source
    result = []
    for candidate, ok in zip(candidates, matched):
        if not ok:
            continue
        branches = None
        if reference is not None:
            branches = {
                str(s.prime): branch_of(candidate, reference, s.prime) for s in frozen
            }
        result.append(Candidate(candidate, branches))
    logger.opt(colors=True).debug(
        f"候选 <c>{len(candidates)}</c> 个，权条件排除无穷型 {guarded} 组，"
        f"匹配 <y>{len(result)}</y> 个"
    )
    return result


def expected_pairs(reference: CharPair, space: SearchSpace) -> set[CharPair]:
    """{φ, φ′} 中落在搜索范围内的特征对"""
    types = space.pair_types()
    return {
        pair
        for pair in (reference, involution(reference))
        if pair.infinity_types in types and pair.n1.norm * pair.n2.norm <= space.bound
    }


class RecoveryReport(ReportModel):
    """特征对恢复报告"""

    field_d: int
    bound: int
    weight: list[int]
    tags: list[str]
    bypass_weight_guard: bool
    samples: int
    sample_bound: int | None
    candidates: list[dict[str, Any]]
    matches: int
    expected_pair: bool | None
    """结果恰为搜索范围内的 {φ, φ′}；没有参照特征对时为 None"""


def recovery_report(
    samples: SampleSet,
    space: SearchSpace,
    candidates: Iterable[Candidate],
    *,
    reference: CharPair | None = None,
    sample_bound: int | None = None,
) -> RecoveryReport:
    candidates = list(candidates)
    reference = reference or samples.source
    expected = None
    if reference is not None:
        found = {c.pair for c in candidates}
        expected = found == expected_pairs(reference, space)
    return RecoveryReport(
        field_d=samples.field.d,
        bound=space.bound,
        weight=space.weight.to_json(),
        tags=[t.value for t in space.tags],
        bypass_weight_guard=space.bypass_weight_guard,
        samples=len(samples),
        sample_bound=sample_bound,
        candidates=[c.to_json() for c in candidates],
        matches=len(candidates),
        expected_pair=expected,
    )
