from sympy import primerange

from bianchi.quadfield import QuadField, QuadIdeal, SplitKind, split_prime

PROPERTY_CASES = 1000
"""随机性质检验的用例数"""


def ideal(field: QuadField, x: int, y: int = 0) -> QuadIdeal:
    """(x + yω)"""
    return QuadIdeal.generated_by(field, field.element(x, y))


def split_primes(field: QuadField, bound: int, avoid: int = 1) -> list[int]:
    """不超过 bound、在 field 中分裂且不整除 avoid 的有理素数"""
    return [
        int(ell)
        for ell in primerange(2, bound + 1)
        if avoid % ell and split_prime(field, int(ell)).kind is SplitKind.SPLIT
    ]
