"""本模块配置日志：loguru 记录，rich 渲染到标准错误，可选按天滚动的文件

标准输出只用于报告，日志一律写入标准错误。
"""

import logging
import re
from functools import wraps
from typing import TYPE_CHECKING, Any, ClassVar, Literal

import loguru
from loguru._logger import Core, Logger
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.text import Text
from rich.theme import Theme
from rich.traceback import install

from bianchi.config import LOG_DIR, core_config, ensure_dir

if TYPE_CHECKING:
    from loguru import Logger as LoggerType
    from loguru import Record

logger: "LoggerType" = loguru.logger
"""日志记录器对象"""

type LevelName = Literal[
    "TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"
]

install(width=None, show_locals=core_config.debug)

for level in Core().levels.values():
    logging.addLevelName(level.no, level.name)

_TAGS = {
    "k": "black",
    "e": "blue",
    "c": "cyan",
    "g": "green",
    "m": "magenta",
    "r": "red",
    "w": "white",
    "y": "yellow",
    "b": "bold",
    "d": "dim",
    "i": "italic",
    "u": "underline",
}
"""loguru 单字母标签 → rich 样式"""

_TAG_PATTERN = re.compile(r"(?<!\\)<(/?)([a-z]+)>")


def to_rich_markup(message: str) -> str:
    """把 `<y>…</y>` 形式的 loguru 标签换成 rich 标签，未知标签原样保留"""

    def replace(match: re.Match[str]) -> str:
        closing, tag = match.groups()
        style = _TAGS.get(tag)
        if style is None:
            return match[0]
        return "[/]" if closing else f"[{style}]"

    return _TAG_PATTERN.sub(replace, escape(message))


def _patch_log(func):  # noqa: ANN001, ANN202
    """带 colors 选项的消息改写为 rich 标签，其余消息整体转义"""

    @wraps(func)
    def wrapper(self, level, from_decorator, options, message, args, kwargs):  # noqa: ANN001, ANN202
        exception, depth, record, lazy, colors, *rest, extra = options
        message = to_rich_markup(message) if colors else escape(message)
        options = (exception, depth + 1, record, lazy, False, *rest, extra)
        return func(self, level, from_decorator, options, message, args, kwargs)

    return wrapper


Logger._log = _patch_log(Logger._log)


def _plain_text(record: "Record") -> None:
    # 文件中只写纯文本
    record["extra"]["plain"] = Text.from_markup(record["message"]).plain


console = Console(
    theme=Theme(
        {
            "log.time": "cyan",
            "logging.level.debug": "blue",
            "logging.level.info": "",
            "logging.level.warning": "yellow",
            "logging.level.success": "bright_green",
            "logging.level.trace": "bright_black",
        }
    ),
    stderr=True,
)

handler = RichHandler(
    console=console,
    show_path=False,
    omit_repeated_times=False,
    markup=True,
    rich_tracebacks=True,
    tracebacks_show_locals=core_config.debug,
    log_time_format="%m-%d %H:%M:%S",
)


class LogFilter:
    """按记录器绑定的 filter_level 过滤，未绑定时使用全局等级"""

    level: ClassVar[LevelName | int] = (
        "DEBUG" if core_config.debug else core_config.log_level
    )

    def __call__(self, record: "Record") -> bool:
        level = record["extra"].get("filter_level") or self.level
        levelno = level if isinstance(level, int) else logger.level(level).no
        return record["level"].no >= levelno


def file_sinks(levels: LevelName | tuple[LevelName, ...] | None) -> list[dict[str, Any]]:
    """`core.log_file` 对应的文件输出，单个等级写入同一文件，多个等级各自分目录"""
    if levels is None:
        return []
    common = {
        "rotation": "00:00",
        "enqueue": True,
        "encoding": "utf-8",
        "retention": f"{core_config.log_expire_timeout} days",
        "format": "{time:YYYY-MM-DD HH:mm:ss} | {level} | {name} | {extra[plain]}\n{exception}",
    }
    if isinstance(levels, str):
        return [{"sink": ensure_dir(LOG_DIR) / "{time:YYYY-MM-DD}.log", "level": levels, **common}]
    return [
        {
            "sink": ensure_dir(LOG_DIR / name.lower()) / "{time:YYYY-MM-DD}.log",
            "level": name,
            "filter": lambda record, name=name: record["level"].name == name,
            **common,
        }
        for name in levels
    ]


logger.remove()
logger.configure(
    handlers=[
        {
            "sink": handler,
            "level": 0,
            "colorize": False,
            "diagnose": False,
            "backtrace": True,
            "filter": LogFilter(),
            "format": lambda _: "[light_slate_blue bold]{name}[/] [dim]|[/] {message}",
        },
        *file_sinks(core_config.log_file),
    ],
    patcher=_plain_text,
)


def new_logger(
    name: str, *, filter_level: LevelName | int | None = None
) -> "LoggerType":
    """创建新的日志记录器。

    ### 参数
        name: 日志名称，如 `bianchi.padic`

        filter_level: 过滤等级，当日志等级大于过滤等级时才会显示
    """
    return logger.patch(lambda record: record.update({"name": name})).bind(
        filter_level=filter_level
    )
