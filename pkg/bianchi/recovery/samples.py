"""本模块定义了特征值样本集"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import Self

from bianchi.arith import CycloNum
from bianchi.characters import CharPair
from bianchi.eigensystem import CSV_COLUMNS, Eigensystem
from bianchi.exception import BianchiError, EmptySampleError, RecoveryError
from bianchi.quadfield import QuadField, QuadIdeal, is_prime_ideal
from bianchi.utils import read_csv, write_csv


def _cell[T](line: int, row: dict[str, str], column: str, parse: Callable[[str], T]) -> T:
    """解析 CSV 的一个单元格，失败时指明行与列

    ### 异常
        RecoveryError: 单元格无法解析
    """
    try:
        return parse(row[column])
    except (ValueError, ZeroDivisionError, BianchiError) as e:
        raise RecoveryError(f"第 {line} 条记录的 {column} 列无法解析: {row[column]!r}") from e


@dataclass(frozen=True, slots=True)
class Sample:
    """素理想 q 处的 (a_q, d_q)"""

    prime: QuadIdeal
    a: CycloNum
    d: CycloNum


@dataclass(frozen=True)
class SampleSet:
    """特征值样本集 S"""

    field: QuadField
    samples: tuple[Sample, ...]
    degree_one: bool = True
    """是否要求全部素理想为一次素理想"""
    coprime_to: QuadIdeal | None = None
    """全部素理想必须与之互素的理想"""
    source: CharPair | None = field(default=None, compare=False)
    """生成样本的特征对，用于分支诊断"""

    def __post_init__(self) -> None:
        seen: set[QuadIdeal] = set()
        for sample in self.samples:
            q = sample.prime
            if q.field != self.field:
                raise RecoveryError(f"样本素理想 {q} 不属于 {self.field}")
            if q in seen:
                raise RecoveryError(f"样本素理想 {q} 重复")
            seen.add(q)
            if not is_prime_ideal(q):
                raise RecoveryError(f"{q} 不是素理想")
            if self.degree_one and q.norm != q.a:
                raise RecoveryError(f"{q} 不是一次素理想")
            if self.coprime_to is not None and not q.is_coprime(self.coprime_to):
                raise RecoveryError(f"{q} 与 {self.coprime_to} 不互素")

    @classmethod
    def from_pair(
        cls,
        pair: CharPair,
        bound: int,
        *,
        degree_one: bool = True,
        coprime_to: QuadIdeal | None = None,
    ) -> Self:
        """特征对在范数不超过 bound、与水平互素的素理想上的特征值"""
        system = Eigensystem(pair)
        coprime = pair.level if coprime_to is None else pair.level * coprime_to
        samples = tuple(
            Sample(v.prime, v.a, v.d)
            for v in system.table(
                q for q in system.primes(bound, degree_one=degree_one)
                if q.is_coprime(coprime)
            )
        )
        return cls(pair.field, samples, degree_one, coprime, source=pair)

    @classmethod
    def from_csv(
        cls,
        field: QuadField,
        text: str,
        *,
        degree_one: bool = True,
        coprime_to: QuadIdeal | None = None,
    ) -> Self:
        """从特征系统表的 CSV 文本读取样本

        ### 异常
            RecoveryError: 缺少列或范数与理想不符
        """
        rows = read_csv(text)
        samples = []
        for line, row in enumerate(rows, start=1):
            missing = [c for c in CSV_COLUMNS if c not in row]
            if missing:
                raise RecoveryError(f"CSV 缺少列 {missing}")
            prime = _cell(line, row, "prime", lambda s: QuadIdeal.parse(field, s))
            norm = _cell(line, row, "norm", int)
            if prime.norm != norm:
                raise RecoveryError(f"第 {line} 条记录: {prime} 的范数为 {prime.norm}，而表中为 {norm}")
            a = _cell(line, row, "a_q", CycloNum.parse)
            d = _cell(line, row, "d_q", CycloNum.parse)
            samples.append(Sample(prime, a, d))
        return cls(field, tuple(samples), degree_one, coprime_to)

    def to_csv(self) -> str:
        return write_csv(
            (
                {"prime": str(s.prime), "norm": s.prime.norm, "a_q": str(s.a), "d_q": str(s.d)}
                for s in self.samples
            ),
            CSV_COLUMNS,
        )

    def require_nonempty(self) -> None:
        if not self.samples:
            raise EmptySampleError("样本集为空，任何特征对都会空洞地匹配")

    def primes(self) -> list[QuadIdeal]:
        return [s.prime for s in self.samples]

    def __len__(self) -> int:
        return len(self.samples)

    def __iter__(self) -> Iterator[Sample]:
        return iter(self.samples)
