"""本模块解析命令行中的特征、特征对与理想选择器

- `a,b,c/ta,tb/index`：导子 Hermite 标准形为 (a, b, c)、无穷型为 (ta, tb) 的第 index 个本原特征
- `sel;sel`：特征对
- `corpus:<name>`：语料库中的特征对或基变换特征
"""

import json
from pathlib import Path

from bianchi.characters import CharPair, HeckeChar, chars_of_conductor
from bianchi.corpus import get_character, get_entry
from bianchi.eigensystem import Weight
from bianchi.exception import BianchiError, ConfigError
from bianchi.quadfield import QuadField, QuadIdeal

CORPUS_PREFIX = "corpus:"


def _ints(text: str, count: int, what: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError as e:
        raise ConfigError(f"{what} 必须是 {count} 个以逗号分隔的整数: {text!r}") from e
    if len(values) != count:
        raise ConfigError(f"{what} 必须是 {count} 个以逗号分隔的整数: {text!r}")
    return values


def parse_ideal(field: QuadField, text: str) -> QuadIdeal:
    a, b, c = _ints(text.strip().removeprefix("[").removesuffix("]"), 3, "理想")
    try:
        return QuadIdeal(field, a, b, c)
    except BianchiError as e:
        raise ConfigError(f"({a},{b},{c}) 不是 {field} 的理想: {e}") from e


def parse_type(text: str) -> tuple[int, int]:
    a, b = _ints(text, 2, "无穷型")
    return a, b


def parse_weight(text: str) -> Weight:
    k, ell = _ints(text, 2, "权")
    return Weight(k, ell)


def char_selector(char: HeckeChar, index: int) -> str:
    """特征的选择器文本"""
    m = char.conductor
    a, b = char.infinity_type
    return f"{m.a},{m.b},{m.c}/{a},{b}/{index}"


def parse_char(field: QuadField, text: str) -> HeckeChar:
    """解析单个特征的选择器

    ### 异常
        ConfigError: 格式错误或序号越界
    """
    text = text.strip()
    if text.startswith(CORPUS_PREFIX):
        return get_character(text.removeprefix(CORPUS_PREFIX))
    parts = text.split("/")
    if len(parts) != 3:  # noqa: PLR2004
        raise ConfigError(f"特征选择器的格式为 a,b,c/ta,tb/index: {text!r}")
    conductor = parse_ideal(field, parts[0])
    infinity_type = parse_type(parts[1])
    try:
        index = int(parts[2])
    except ValueError as e:
        raise ConfigError(f"特征序号必须是整数: {parts[2]!r}") from e
    chars = chars_of_conductor(field, conductor, infinity_type)
    if not 0 <= index < len(chars):
        raise ConfigError(
            f"导子 {conductor}、无穷型 {infinity_type} 的本原特征共 {len(chars)} 个，序号 {index} 越界"
        )
    return chars[index]


def parse_pair(field: QuadField, text: str) -> CharPair:
    """解析特征对的选择器 `sel;sel` 或 `corpus:<name>`"""
    text = text.strip()
    if text.startswith(CORPUS_PREFIX):
        return get_entry(text.removeprefix(CORPUS_PREFIX)).pair
    parts = text.split(";")
    if len(parts) != 2:  # noqa: PLR2004
        raise ConfigError(f"特征对选择器的格式为 sel;sel 或 corpus:<name>: {text!r}")
    return CharPair(parse_char(field, parts[0]), parse_char(field, parts[1]))


def load_pair_file(path: str | Path) -> CharPair:
    """读取 `CharPair.to_json` 写出的文件"""
    path = Path(path).resolve()
    if not path.is_file():
        raise ConfigError(f"特征对文件不存在: {path}")
    try:
        return CharPair.from_json(json.loads(path.read_text(encoding="utf-8")))
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"无法解析特征对文件 {path}: {e}") from e
