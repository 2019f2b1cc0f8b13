"""本模块包含了所有运行时可能会抛出的异常"""

from typing import Any


class BianchiError(Exception):
    """所有异常的基类"""


# ==============================================================================


class ArithmeticDomainError(BianchiError):
    """精确算术异常"""


class DivisionByZeroError(ArithmeticDomainError, ZeroDivisionError):
    """除以零"""


class OrderOverflowError(ArithmeticDomainError):
    """分圆域的阶超出上限"""


class PrecisionError(ArithmeticDomainError):
    """请求的精度超出上限"""


# ==============================================================================


class FieldError(BianchiError):
    """虚二次域异常"""


class UnsupportedFieldError(FieldError):
    """不支持的域（类数大于 1）"""


class IdealError(FieldError):
    """理想运算异常"""


class NormBoundError(FieldError):
    """范数超出分解上限"""


# ==============================================================================


class CharacterError(BianchiError):
    """Hecke 特征异常"""


class UnitCompatibilityError(CharacterError):
    """单位相容性失败"""

    def __init__(self, message: str, unit: Any = None) -> None:
        super().__init__(message)
        self.unit = unit


class GroupBoundError(CharacterError):
    """剩余类群的阶超出上限"""


class CoprimalityError(CharacterError):
    """导子不互素"""


# ==============================================================================


class EigensystemError(BianchiError):
    """特征系统异常"""


class UnsupportedTypeError(EigensystemError):
    """不支持的无穷型"""


class ExcludedWeightError(EigensystemError):
    """被排除的权"""


# ==============================================================================


class PadicError(BianchiError):
    """p 进运算异常"""


class UnsupportedPrimeError(PadicError):
    """p 在 K 中不分裂或整除水平"""


class RamifiedEmbeddingError(PadicError):
    """p 整除分圆阶"""


class InfiniteValuationError(PadicError):
    """零的赋值为无穷"""


class InsufficientPrecisionError(PadicError):
    """p 进精度不足"""


# ==============================================================================


class RecoveryError(BianchiError):
    """特征恢复异常"""


class EmptySampleError(RecoveryError):
    """样本集为空"""


class BaseChangeError(BianchiError):
    """基变换异常"""


class BadPrimeError(BaseChangeError):
    """素理想整除导子"""


# ==============================================================================


class MismatchError(BianchiError):
    """定理检验不一致"""

    def __init__(self, message: str, diff: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.diff = diff or {}


# ==============================================================================


class ResourceError(BianchiError):
    """资源操作异常"""


class FileNotExistError(ResourceError, FileNotFoundError):
    """文件不存在"""


class ReadFileError(ResourceError):
    """读取文件错误"""


class FileTypeError(ResourceError):
    """文件类型错误"""


class ConfigError(ResourceError):
    """配置错误"""
