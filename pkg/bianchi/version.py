"""本模块用于获取元数据及版本信息"""

from importlib.metadata import PackageNotFoundError, metadata

from pydantic import BaseModel


class Metadata(BaseModel):
    name: str
    version: str
    summary: str

    class Config:
        extra = "allow"


try:
    __metadata__ = Metadata(**metadata("bianchi-eisenstein").json)  # type: ignore
except PackageNotFoundError:
    __metadata__ = Metadata(name="bianchi-eisenstein", version="0.0.0", summary="")

__version__ = __metadata__.version

CONVENTION_ID = "inf-type:eps(a)*a^-a*conj(a)^-b"
"""无穷型符号约定：χ((α)) = ε(α)·α^{−a}·ᾱ^{−b}"""

CONVENTION_VERSION = f"{CONVENTION_ID}@1"
"""嵌入每份报告的数学约定版本字符串"""
