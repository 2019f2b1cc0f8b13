"""本模块把 φ 的基变换特征值与特征对 (φ^{−1}, (φ^c)^{−1}|·|^{−1}) 的 Eisenstein 特征系统对照"""

from typing import Any

import mpmath

from bianchi.arith import CycloNum
from bianchi.characters import CharPair, HeckeChar
from bianchi.eigensystem import HeckeEigenvalues, classify, eis_eigensystem
from bianchi.exception import BadPrimeError, MismatchError
from bianchi.log import new_logger
from bianchi.quadfield import QuadIdeal, SplitKind, prime_ideals, prime_of
from bianchi.utils import ReportModel, parallel_map

from .theta import BaseChangeInput, DirichletData, ThetaData, theta_data

logger = new_logger("bianchi.basechange")

BOUND_TOLERANCE = mpmath.mpf("1e-8")


def bc_pair(phi: HeckeChar) -> CharPair:
    """(φ^{−1}, (φ^c)^{−1}|·|^{−1})，无穷型为 [(k+1, 0), (−1, k)]"""
    return CharPair(phi.inverse(), phi.conjugate().inverse().norm_twist(-1))


def bianchi_bc_eigenvalue(phi: HeckeChar, prime: QuadIdeal) -> CycloNum:
    """基变换在 𝔮 处的 Hecke 特征值

    分裂时 φ(𝔮) + φ(𝔮̄)，惰性时 2φ(𝔮)，分歧时 φ(𝔮)。

    ### 异常
        BadPrimeError: 𝔮 整除 φ 的导子
    """
    if not prime.is_coprime(phi.conductor):
        raise BadPrimeError(f"{prime} 整除导子 {phi.conductor}，基变换特征值无定义")
    match prime_of(prime).kind:
        case SplitKind.SPLIT:
            return phi(prime) + phi(prime.conj())
        case SplitKind.INERT:
            return phi(prime) * 2
        case _:
            return phi(prime)


def within_eisenstein_bound(a: CycloNum, norm: int, k: int) -> bool:
    """|a| ≤ 2·N(𝔮)^{(k+1)/2}，容差 10⁻⁸"""
    re, im = a.embed_complex()
    bound = 2 * mpmath.power(norm, mpmath.mpf(k + 1) / 2)
    return bool(mpmath.sqrt(re * re + im * im) <= bound + BOUND_TOLERANCE)


def _match_row(job: tuple[BaseChangeInput, DirichletData, CharPair, QuadIdeal]) -> dict[str, Any]:
    inp, dirichlet, pair, prime = job
    splitting = prime_of(prime)
    q, k = splitting.ell, inp.k
    bianchi = bianchi_bc_eigenvalue(inp.phi, prime)
    values = eis_eigensystem(pair, prime)
    assert isinstance(values, HeckeEigenvalues)
    row: dict[str, Any] = {
        "prime": prime.to_json(),
        "norm": prime.norm,
        "kind": splitting.kind.value,
        "bianchi": bianchi.to_json(),
        "eisenstein": values.a.to_json(),
        "match": bianchi == values.a,
        "within_bound": within_eisenstein_bound(values.a, prime.norm, k),
    }
    if splitting.kind is SplitKind.SPLIT:
        row["determinant_identity"] = values.d == dirichlet.nebentypus(q) * q**k
    else:
        # theta 级数在惰性素数处的系数为 0
        lhs = -(dirichlet.phi_z(q) * (2 * dirichlet.chi_k(q) * q ** (k + 1)))
        row["inert_identity"] = lhs == inp.phi(prime) * 2
    return row


def _ramified_row(inp: BaseChangeInput, pair: CharPair, prime: QuadIdeal) -> dict[str, Any]:
    table = bianchi_bc_eigenvalue(inp.phi, prime)
    values = eis_eigensystem(pair, prime)
    assert isinstance(values, HeckeEigenvalues)
    return {
        "prime": prime.to_json(),
        "table": table.to_json(),
        "formula": values.a.to_json(),
        "agree": table == values.a,
    }


class BaseChangeReport(ReportModel):
    """基变换对照报告"""

    input: dict[str, Any]
    pair: dict[str, Any]
    pair_tag: str
    theta: dict[str, Any]
    bound: int
    rows: list[dict[str, Any]]
    """与 D·m·m̄ 互素的分裂与惰性素理想"""
    ramified: list[dict[str, Any]]
    """分歧素理想处表值 φ(𝔮) 与特征对给出的 2φ(𝔮)，只记录不断言"""
    theta_coefficients: list[dict[str, Any]]
    all_match: bool


def bc_verify(
    inp: BaseChangeInput,
    bound: int,
    *,
    theta_terms: int = 0,
    workers: int = 1,
) -> BaseChangeReport:
    """在范数不超过 bound 的素理想上对照基变换特征值与 bc_pair 的 Eisenstein 特征值。

    ### 参数
        inp: 基变换输入

        bound: 素理想范数上限

        theta_terms: 报告中附带的 theta 系数个数

        workers: 并行进程数

    ### 异常
        MismatchError: 某个分裂或惰性素理想处不一致，diff 中给出这些素理想
    """
    phi = inp.phi
    pair = bc_pair(phi)
    theta: ThetaData = theta_data(inp)
    bad = pair.level * QuadIdeal.generated_by(phi.field, phi.field.D)
    if inp.p is not None:
        bad = bad * QuadIdeal.generated_by(phi.field, inp.p)
    primes = prime_ideals(phi.field, bound)
    good = [q for q in primes if q.is_coprime(bad)]
    rows = parallel_map(
        _match_row, [(inp, theta.dirichlet, pair, q) for q in good], workers=workers
    )
    ramified = [
        _ramified_row(inp, pair, q)
        for q in primes
        if prime_of(q).kind is SplitKind.RAMIFIED and q.is_coprime(pair.level)
    ]
    for row in ramified:
        if not row["agree"]:
            logger.opt(colors=True).info(
                f"分歧素理想 <y>{row['prime']}</y> 处表值与特征对公式不同"
            )

    failed = [
        row["prime"]
        for row in rows
        if not row["match"]
        or not row["within_bound"]
        or not row.get("determinant_identity", True)
        or not row.get("inert_identity", True)
    ]
    if failed:
        raise MismatchError(
            f"{phi} 的基变换在 {len(failed)} 个素理想处与 bc_pair 不一致",
            diff={"primes": failed},
        )
    logger.opt(colors=True).debug(
        f"基变换在 <c>{len(rows)}</c> 个素理想处与 bc_pair 一致"
    )
    coefficients = theta.coefficients(theta_terms) if theta_terms > 0 else []
    return BaseChangeReport(
        input=inp.to_json(),
        pair=pair.to_json(),
        pair_tag=classify(pair).tag.value,
        theta=theta.to_json(),
        bound=bound,
        rows=rows,
        ramified=ramified,
        theta_coefficients=[
            {"n": n, "a_n": a.to_json()} for n, a in enumerate(coefficients, start=1)
        ],
        all_match=True,
    )
