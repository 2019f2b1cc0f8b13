"""本模块提供了报告模型与确定性的 JSON / CSV 输出"""

import csv
import io
import json
from collections.abc import Iterable, Mapping
from typing import Any

from pydantic import BaseModel


def dumps(data: Any) -> str:
    """确定性的 JSON 文本，键按字典序排列"""
    return json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2)


class ReportModel(BaseModel):
    """报告模型"""

    class Config:
        extra = "forbid"
        use_enum_values = True
        allow_mutation = False

    def to_json(self) -> dict[str, Any]:
        return json.loads(self.json())


def write_csv(rows: Iterable[Mapping[str, Any]], columns: list[str]) -> str:
    """把若干行写成 CSV 文本，换行统一为 `\\n`"""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row[c] for c in columns})
    return buffer.getvalue()


def csv_header(meta: Mapping[str, Any]) -> str:
    """以 `#` 开头的注释行，每个键一行，值为紧凑的 JSON"""
    return "".join(
        f"# {key}: {json.dumps(meta[key], sort_keys=True, ensure_ascii=False)}\n"
        for key in sorted(meta)
    )


def read_csv(text: str) -> list[dict[str, str]]:
    """读取 CSV 文本，跳过 `#` 注释行"""
    lines = (line for line in io.StringIO(text) if not line.startswith("#"))
    return list(csv.DictReader(lines))
