"""本模块提供了确定性的回归语料库

语料库覆盖 Q(i)、Q(√−2)、Q(√−3) 上 TYPE_A 与 TYPE_B 两类特征对，导子范数乘积不超过 50，
权的分量不超过 3；另附用于基变换的 (−k−1, 0) 型特征。
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from bianchi.characters import CharPair, HeckeChar, chars_of_conductor
from bianchi.eigensystem import TypeTag, Weight, pair_type
from bianchi.exception import ConfigError
from bianchi.log import new_logger
from bianchi.quadfield import QuadField, QuadIdeal

logger = new_logger("bianchi.corpus")

CORPUS_FIELDS = (-1, -2, -3)
CORPUS_BOUND = 50
CORPUS_WEIGHTS: dict[TypeTag, tuple[Weight, ...]] = {
    TypeTag.TYPE_A: (Weight(0, 0), Weight(1, 1), Weight(2, 0)),
    TypeTag.TYPE_B: (Weight(1, 1), Weight(0, 2), Weight(3, 3)),
}
PER_WEIGHT = 2
"""每个 (域, 类别, 权) 取的特征对个数"""

_TAG_NAMES = {TypeTag.TYPE_A: "a", TypeTag.TYPE_B: "b"}


@dataclass(frozen=True, slots=True)
class CorpusEntry:
    name: str
    pair: CharPair
    tag: TypeTag
    weight: Weight

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "tag": self.tag.value,
            "weight": self.weight.to_json(),
            "level": str(self.pair.level),
            "pair": self.pair.to_json(),
        }


@dataclass(frozen=True, slots=True)
class CorpusCharacter:
    """基变换语料：无穷型 (−k−1, 0)、导子与其共轭互素的特征"""

    name: str
    phi: HeckeChar

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "phi": self.phi.to_json()}


def find_pairs(
    field: QuadField, tag: TypeTag, weight: Weight, limit: int = 1
) -> list[CharPair]:
    """导子范数乘积不超过 CORPUS_BOUND 的前 limit 个给定类别与权的特征对"""
    types = pair_type(tag, weight)
    ideals = QuadIdeal.up_to(field, CORPUS_BOUND)
    result: list[CharPair] = []
    for g1 in ideals:
        for g2 in ideals:
            if g1.norm * g2.norm > CORPUS_BOUND or not g1.is_coprime(g2):
                continue
            first = chars_of_conductor(field, g1, types[0])
            second = chars_of_conductor(field, g2, types[1])
            if first and second:
                result.append(CharPair(first[0], second[0]))
            if len(result) >= limit:
                return result
    return result


@lru_cache(maxsize=1)
def corpus() -> tuple[CorpusEntry, ...]:
    """全部语料，按 (域, 类别, 权, 序号) 排列"""
    entries = []
    for d in CORPUS_FIELDS:
        field = QuadField(d)
        for tag, weights in CORPUS_WEIGHTS.items():
            for weight in weights:
                pairs = find_pairs(field, tag, weight, PER_WEIGHT)
                for index, pair in enumerate(pairs):
                    name = f"d{-d}-{_TAG_NAMES[tag]}-w{weight.k}{weight.ell}-{index}"
                    entries.append(CorpusEntry(name, pair, tag, weight))
    logger.opt(colors=True).debug(f"回归语料库共 <y>{len(entries)}</y> 个特征对")
    return tuple(entries)


def gaussian_character() -> HeckeChar:
    """Q(i) 上导子 (2+i)、无穷型 (−1, 0) 的特征，ε(i) = −ζ₄"""
    field = QuadField(-1)
    conductor = QuadIdeal.generated_by(field, field.element(2, 1))
    return chars_of_conductor(field, conductor, (-1, 0))[0]


@lru_cache(maxsize=1)
def bc_characters() -> tuple[CorpusCharacter, ...]:
    """基变换语料：Q(i) 的 (2+i) 特征，以及 Q(i)、Q(√−2) 上 k = 0, 1 的若干特征"""
    result = [CorpusCharacter("d1-bc-2+i", gaussian_character())]
    seen = {result[0].phi}
    for d in (-1, -2):
        field = QuadField(d)
        for k in (0, 1):
            count = 0
            for m in QuadIdeal.up_to(field, CORPUS_BOUND):
                if m.norm == 1 or not m.is_coprime(m.conj()):
                    continue
                chars = [c for c in chars_of_conductor(field, m, (-k - 1, 0)) if c not in seen]
                if not chars:
                    continue
                seen.add(chars[0])
                result.append(CorpusCharacter(f"d{-d}-bc-k{k}-{count}", chars[0]))
                count += 1
                if count >= PER_WEIGHT:
                    break
    return tuple(result)


def get_entry(name: str) -> CorpusEntry:
    """按名称取语料

    ### 异常
        ConfigError: 名称不存在
    """
    for entry in corpus():
        if entry.name == name:
            return entry
    raise ConfigError(f"语料库中没有 {name}，可用 `bianchi corpus` 查看全部名称")


def get_character(name: str) -> HeckeChar:
    for entry in bc_characters():
        if entry.name == name:
            return entry.phi
    raise ConfigError(f"基变换语料中没有 {name}")
