"""本模块实现了素数分解、理想分解与主理想的标准生成元"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache, reduce
from itertools import product
from math import isqrt
from typing import Any

from sympy import Poly, Symbol, factorint, isprime, primerange

from bianchi.config import limit_config
from bianchi.exception import IdealError, NormBoundError, UnsupportedFieldError

from .field import QuadField, QuadInt
from .ideal import QuadIdeal

_x = Symbol("x")


class SplitKind(str, Enum):
    """有理素数在 K 中的分解类型"""

    SPLIT = "split"
    """分裂，ℓ = 𝔮𝔮̄"""
    INERT = "inert"
    """惰性，(ℓ) 为素理想"""
    RAMIFIED = "ramified"
    """分歧，ℓ = 𝔮²"""


@dataclass(frozen=True, slots=True)
class PrimeSplitting:
    ell: int
    kind: SplitKind
    primes: tuple[QuadIdeal, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "ell": self.ell,
            "kind": self.kind.value,
            "primes": [{**p.to_json(), "splitting": self.kind.value} for p in self.primes],
        }


@lru_cache(maxsize=4096)
def split_prime(field: QuadField, ell: int) -> PrimeSplitting:
    """有理素数 ℓ 在 K 中的分解。

    由 Dedekind–Kummer 定理，按 ω 的极小多项式 x² − tx + n 模 ℓ 的分解读出素理想 (ℓ, ω − r)。

    ### 参数
        field: 虚二次域

        ell: 有理素数
    """
    if not isprime(ell):
        raise ValueError(f"{ell} 不是素数")
    poly = Poly(_x**2 - field.t * _x + field.n, _x, modulus=ell)
    _, factors = poly.factor_list()
    roots = sorted(
        int(-f.all_coeffs()[-1]) % ell for f, _ in factors if f.degree() == 1
    )
    match field.kronecker(ell):
        case 1:
            kind = SplitKind.SPLIT
            primes = [QuadIdeal.generated_by(field, ell, field.omega - r) for r in roots]
        case 0:
            kind = SplitKind.RAMIFIED
            primes = [QuadIdeal.generated_by(field, ell, field.omega - roots[0])]
        case _:
            kind = SplitKind.INERT
            primes = [QuadIdeal.generated_by(field, ell)]
    return PrimeSplitting(ell, kind, tuple(sorted(primes, key=lambda p: p.sort_key)))


def prime_ideals(
    field: QuadField, bound: int, *, degree_one: bool = False
) -> list[QuadIdeal]:
    """范数不超过 bound 的全部素理想，按 (范数, a, b, c) 排序。

    ### 参数
        field: 虚二次域

        bound: 范数上限

        degree_one: 是否只保留一次素理想（范数为有理素数）
    """
    primes = []
    for ell in primerange(2, bound + 1):
        for q in split_prime(field, ell).primes:
            if q.norm <= bound and (not degree_one or q.norm == ell):
                primes.append(q)
    return sorted(primes, key=lambda p: p.sort_key)


def prime_of(ideal: QuadIdeal) -> PrimeSplitting:
    """素理想所在的有理素数的分解"""
    # 素理想的 Hermite 标准形中 a 恰为 ℓ
    if not isprime(ideal.a):
        raise IdealError(f"{ideal} 不是素理想")
    splitting = split_prime(ideal.field, ideal.a)
    if ideal not in splitting.primes:
        raise IdealError(f"{ideal} 不是素理想")
    return splitting


def is_prime_ideal(ideal: QuadIdeal) -> bool:
    if not isprime(ideal.a):
        return False
    return ideal in split_prime(ideal.field, ideal.a).primes


class IdealFactorization:
    """理想的素分解，素理想按 (范数, a, b, c) 排序"""

    __slots__ = ("field", "factors")

    field: QuadField
    """所在的域"""
    factors: tuple[tuple[QuadIdeal, int], ...]
    """(素理想, 指数) 序列"""

    def __init__(
        self, field: QuadField, factors: Iterable[tuple[QuadIdeal, int]]
    ) -> None:
        self.field = field
        self.factors = tuple(sorted(factors, key=lambda item: item[0].sort_key))

    def __iter__(self) -> Iterator[tuple[QuadIdeal, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealFactorization):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def primes(self) -> list[QuadIdeal]:
        return [q for q, _ in self.factors]

    def valuation(self, prime: QuadIdeal) -> int:
        return dict(self.factors).get(prime, 0)

    def product(self) -> QuadIdeal:
        return reduce(
            lambda acc, item: acc * item[0] ** item[1],
            self.factors,
            QuadIdeal.unit(self.field),
        )

    def to_json(self) -> list[dict[str, Any]]:
        return [{"prime": q.to_json(), "exponent": e} for q, e in self.factors]

    def __repr__(self) -> str:
        body = "·".join(f"{q}^{e}" if e > 1 else str(q) for q, e in self.factors)
        return f"IdealFactorization({body or '(1)'})"


@lru_cache(maxsize=8192)
def factor_ideal(ideal: QuadIdeal) -> IdealFactorization:
    """整理想的素分解。

    ### 参数
        ideal: 非零整理想

    ### 异常
        NormBoundError: 范数超出 `limits.max_factor_norm`
    """
    if ideal.norm > limit_config.max_factor_norm:
        raise NormBoundError(
            f"理想 {ideal} 的范数 {ideal.norm} 超出分解上限 {limit_config.max_factor_norm}"
        )
    factors = []
    rest = ideal
    for ell in sorted(factorint(ideal.norm)):
        for q in split_prime(ideal.field, ell).primes:
            e = 0
            while q.divides(rest):
                rest = rest / q
                e += 1
            if e:
                factors.append((q, e))
    if not rest.is_unit():
        raise IdealError(f"理想 {ideal} 分解后剩余 {rest}")
    return IdealFactorization(ideal.field, factors)


def ideal_valuation(ideal: QuadIdeal, prime: QuadIdeal) -> int:
    """素理想 prime 在 ideal 中的指数"""
    return factor_ideal(ideal).valuation(prime)


def divisors(ideal: QuadIdeal) -> list[QuadIdeal]:
    """全部因子理想，按 (范数, a, b, c) 排序"""
    factorization = factor_ideal(ideal)
    choices = [range(e + 1) for _, e in factorization]
    result = []
    for exponents in product(*choices):
        result.append(
            reduce(
                lambda acc, item: acc * item[0] ** item[1],
                zip(factorization.primes(), exponents),
                QuadIdeal.unit(ideal.field),
            )
        )
    return sorted(result, key=lambda i: i.sort_key)


def _in_sector(element: QuadInt) -> bool:
    # 复嵌入的辐角落在 [0, 2π/w) 内
    if element.field.w == 2:  # noqa: PLR2004
        return element.y > 0 or (element.y == 0 and element.x > 0)
    return element.x > 0 and element.y >= 0


def normalize_associate(element: QuadInt) -> QuadInt:
    """w 个相伴元中辐角落在 [0, 2π/w) 内的那一个"""
    for unit in element.field.units():
        candidate = element * unit
        if _in_sector(candidate):
            return candidate
    raise IdealError(f"{element} 没有标准相伴元")


def elements_of_norm(field: QuadField, norm: int) -> Iterator[QuadInt]:
    """范数等于 norm 的全部元素，由 4N = (2x + ty)² + D·y² 枚举"""
    t, D = field.t, field.D
    y_bound = isqrt(4 * norm // D) + 1
    for y in range(-y_bound, y_bound + 1):
        rest = 4 * norm - D * y * y
        if rest < 0:
            continue
        s = isqrt(rest)
        if s * s != rest:
            continue
        for root in (s, -s) if s else (0,):
            if (root - t * y) % 2 == 0:
                yield QuadInt(field, (root - t * y) // 2, y)


@lru_cache(maxsize=16384)
def canonical_generator(ideal: QuadIdeal) -> QuadInt:
    """主理想的标准生成元。

    ### 参数
        ideal: 整理想

    ### 异常
        UnsupportedFieldError: 理想不是主理想（类数大于 1 时可能发生）
    """
    if ideal.is_unit():
        return QuadInt(ideal.field, 1)
    for element in elements_of_norm(ideal.field, ideal.norm):
        if element in ideal:
            return normalize_associate(element)
    if ideal.field.class_number_one:
        raise IdealError(f"理想 {ideal} 找不到生成元")
    raise UnsupportedFieldError(f"{ideal.field} 中的理想 {ideal} 不是主理想")
