"""本模块定义了运行所需的配置项"""

import os
from collections.abc import KeysView, Mapping
from types import MappingProxyType
from typing import Any, ClassVar, Literal, NoReturn

from pydantic import BaseModel, Field, root_validator, validator
from sympy import factorint, isprime

type LevelName = Literal[
    "TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"
]

WORKERS_ENV = "BIANCHI_WORKERS"
"""并行度覆盖环境变量"""


class BaseConfig(BaseModel, Mapping):
    __raw_config__: ClassVar[MappingProxyType[str, Any]] = MappingProxyType({})

    def __getitem__(self, key: str) -> Any:
        try:
            return getattr(self, key)
        except AttributeError as e:
            raise RuntimeError(
                f"{self.__class__.__name__} 不存在 {key} 配置, 请检查拼写是否正确"
            ) from e

    def __setitem__(self, *_) -> NoReturn:
        raise RuntimeError("无法在运行时修改配置")

    def __delitem__(self, _) -> NoReturn:
        raise RuntimeError("无法在运行时修改配置")

    def __setattr__(self, *_) -> NoReturn:
        raise RuntimeError("无法在运行时修改配置")

    def __delattr__(self, _) -> NoReturn:
        raise RuntimeError("无法在运行时修改配置")

    def __len__(self) -> int:
        return len(self.__dict__)

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self.__dict__}>"

    def keys(self) -> KeysView[str]:
        return self.__dict__.keys()


class CoreConfig(BaseConfig):
    """
    日志与调试配置
    """

    debug: bool = False
    """是否以调试模式运行"""

    log_level: LevelName | int = "INFO"
    """日志输出等级，可以为 `int` 类型等级或等级名称，参考 [loguru 日志等级](https://loguru.readthedocs.io/en/stable/api/logger.html#levels)"""

    log_file: LevelName | tuple[LevelName, ...] | None = None
    """日志保存等级，必须为等级名称；为 None 时不保存日志文件"""

    log_expire_timeout: int = Field(default=7, ge=1)
    """日志文件过期时间，单位: 天"""


class ArithConfig(BaseConfig):
    """
    精确算术配置
    """

    max_cyclo_order: int = Field(default=10_000, ge=1)
    """分圆域 Q(ζ_n) 允许的最大阶 n"""

    max_digits: int = Field(default=60, ge=1)
    """复嵌入允许的最大十进制位数"""


class LimitConfig(BaseConfig):
    """
    枚举与搜索的规模上限
    """

    max_factor_norm: int = Field(default=10**12, ge=1)
    """理想分解允许的最大范数"""

    max_group_order: int = Field(default=4096, ge=1)
    """剩余类单位群 (O/f)^× 允许的最大阶"""

    max_precision: int = Field(default=512, ge=1)
    """p 进精度上限"""

    max_oracle_size: int = Field(default=625, ge=1)
    """局部陪集穷举允许的最大 N(q^M)"""


class RunConfig(BaseConfig):
    """
    命令行运行配置，会被完整嵌入每一份报告。
    """

    field_d: int = -1
    """虚二次域 Q(√d) 的无平方因子 d"""

    conductor_bound: int = Field(default=50, ge=1)
    """导子范数（乘积）上限"""

    prime_bound: int = Field(default=200, ge=2)
    """采样素理想的范数上限"""

    p: int = 13
    """p 进命令使用的素数"""

    precision: int = Field(default=32, ge=1)
    """p 进精度 N"""

    output: Literal["json", "csv"] = "json"
    """特征系统表的输出格式"""

    workers: int = Field(default=1, ge=1)
    """并行进程数，可由环境变量 `BIANCHI_WORKERS` 覆盖"""

    seed: int = 0
    """随机性质测试的种子，不影响任何报告中的数学内容"""

    @root_validator(pre=True)
    def workers_from_env(cls, values: dict[str, Any]) -> dict[str, Any]:
        if workers := os.environ.get(WORKERS_ENV):
            values["workers"] = workers
        return values

    @validator("field_d")
    def check_field_d(cls, value: int) -> int:
        if value >= 0:
            raise ValueError("field_d 必须为负数")
        if any(e > 1 for e in factorint(-value).values()):
            raise ValueError(f"field_d={value} 不是无平方因子数")
        return value

    @validator("p")
    def check_p(cls, value: int) -> int:
        if not isprime(value):
            raise ValueError(f"p={value} 不是素数")
        return value


class BianchiConfig(BaseConfig):
    """
    全部配置。
    """

    core: CoreConfig
    """日志与调试配置"""

    arith: ArithConfig
    """精确算术配置"""

    limits: LimitConfig
    """枚举与搜索的规模上限"""

    run: RunConfig
    """命令行运行配置"""

    @root_validator(pre=True)
    def set_default_config(cls, values: dict[str, Any]) -> dict[str, Any]:
        BaseConfig.__raw_config__ = MappingProxyType(values)
        for name, config in cls.__annotations__.items():
            values.setdefault(name, config())
        return values

    @property
    def config(self) -> MappingProxyType[str, Any]:
        """原始配置"""
        return BaseConfig.__raw_config__

    def with_run(self, overrides: Mapping[str, Any]) -> "RunConfig":
        """合并运行配置覆盖项，返回新的运行配置。

        ### 参数
            overrides: 覆盖项，一般来自 `--config` 指定的 JSON 文件
        """
        return RunConfig(**{**self.run.dict(), **overrides})
