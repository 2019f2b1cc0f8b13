"""本模块是命令行入口

报告写入标准输出，日志写入标准错误。退出码：0 成功，1 用法、配置或计算错误，2 定理检验不一致。
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, NoReturn

from pydantic import ValidationError

from bianchi.config import REPORT_DIR, RunConfig, bianchi_config, ensure_dir
from bianchi.eigensystem import ADMISSIBLE_TAGS
from bianchi.exception import BianchiError, ConfigError, MismatchError
from bianchi.log import new_logger
from bianchi.utils import csv_header, dumps, load_data
from bianchi.version import CONVENTION_VERSION, __version__

from .commands import COMMANDS

logger = new_logger("bianchi.cli")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

RUN_OPTIONS = (
    "field_d",
    "conductor_bound",
    "prime_bound",
    "p",
    "precision",
    "output",
    "workers",
    "seed",
)


class ArgumentParser(argparse.ArgumentParser):
    """用法错误抛出 ConfigError，而不是以退出码 2 退出"""

    def error(self, message: str) -> NoReturn:
        raise ConfigError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("运行配置")
    group.add_argument("--config", help="合并进运行配置的 JSON 文件")
    group.add_argument("--field-d", type=int, help="虚二次域 Q(√d) 的 d")
    group.add_argument("--conductor-bound", type=int, help="导子范数上限")
    group.add_argument("--prime-bound", type=int, help="素理想范数上限")
    group.add_argument("--p", type=int, help="p 进命令使用的素数")
    group.add_argument("--precision", type=int, help="p 进精度")
    group.add_argument("--output", choices=("json", "csv"), help="特征系统表的输出格式")
    group.add_argument("--workers", type=int, help="并行进程数")
    group.add_argument("--seed", type=int, help="随机性质测试的种子")
    parser.add_argument("--save", action="store_true", help="同时把报告写入 data/reports")
    return parser


def _pair_options(parser: argparse.ArgumentParser, *, sweep: bool = False) -> None:
    parser.add_argument("--pair", help="特征对选择器 `sel;sel` 或 `corpus:<name>`")
    parser.add_argument("--pair-file", help="CharPair 的 JSON 文件")
    if sweep:
        parser.add_argument("--corpus", action="store_true", help="遍历整个回归语料库")


def build_parser() -> ArgumentParser:
    common = _common()
    parser = ArgumentParser(
        prog="bianchi",
        description="Bianchi Eisenstein 特征系统的精确计算与定理检验",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser("field-info", parents=[common], help="域的基本信息与素数分解")
    p.add_argument("--bound", type=int, help="素理想范数上限，默认 prime_bound")

    p = sub.add_parser("enum-chars", parents=[common], help="枚举给定无穷型的本原特征")
    p.add_argument("--type", required=True, help="无穷型 ta,tb")
    p.add_argument("--conductor", help="导子 a,b,c，缺省时枚举范数不超过 conductor_bound 的全部导子")

    p = sub.add_parser("eigensystem", parents=[common], help="特征系统表")
    _pair_options(p)
    p.add_argument("--degree-one", action="store_true", help="只用一次素理想")

    p = sub.add_parser("involution", parents=[common], help="特征对的对合及特征系统比较")
    _pair_options(p)

    p = sub.add_parser("dims", parents=[common], help="上同调维数的预测与穷举")
    p.add_argument("mode", choices=("predict", "bruteforce", "both"))
    _pair_options(p, sweep=True)
    p.add_argument("--weight", help="权 k,ell，默认由无穷型推出")
    p.add_argument("--level", help="水平 n 的 a,b,c，默认为特征对的水平")
    p.add_argument("--with-p", action="store_true", help="使用水平 K1(n, p)")
    p.add_argument("--stabilization", help="K1(n, p) 时选定的稳定化标签，如 alpha-beta")

    p = sub.add_parser("stabilize", parents=[common], help="四个 p-稳定化的斜率")
    _pair_options(p, sweep=True)
    p.add_argument("--eigenvariety", action="store_true", help="附带常态稳定化处的维数预测")

    p = sub.add_parser("recover", parents=[common], help="由特征值样本恢复特征对")
    _pair_options(p, sweep=True)
    p.add_argument("--samples", help="特征系统表 CSV 文件")
    p.add_argument("--reference", help="分支诊断的参照特征对选择器")
    p.add_argument("--bound", type=int, help="导子范数乘积上限，默认 conductor_bound")
    p.add_argument("--weight", help="权 k,ell")
    p.add_argument(
        "--tags", nargs="+", choices=[t.value for t in ADMISSIBLE_TAGS], help="允许的类别"
    )
    p.add_argument("--bypass-weight-guard", action="store_true")

    p = sub.add_parser("density", parents=[common], help="样本对射线类的覆盖")
    _pair_options(p)
    p.add_argument("--modulus", help="射线类群的模 a,b,c，默认 n·n")
    p.add_argument(
        "--escalate", action="store_true", help="从 --prime-bound 起加倍范数上限直到覆盖超过一半"
    )

    for name, help_text in (
        ("bc-verify", "基变换与 bc_pair 的特征值对照"),
        ("bc-stabilize", "基变换的 p-稳定化"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--char", required=True, help="特征选择器或 corpus:<name>")
        p.add_argument("--level-exactly-m", action="store_true", help="声明基变换的水平恰为 M·O_K")
        if name == "bc-verify":
            p.add_argument("--theta-terms", type=int, default=0, help="附带的 theta 系数个数")

    p = sub.add_parser("family-congruence", parents=[common], help="双参数族的同余检验")
    _pair_options(p, sweep=True)
    p.add_argument("--m", type=int, default=0, help="p 的幂次")
    p.add_argument("--t", type=int, default=1, help="非零整数 t")
    p.add_argument("--direction", choices=("k", "ell"), default="k")

    sub.add_parser("corpus", parents=[common], help="列出回归语料库")
    return parser


def resolve_run(args: argparse.Namespace) -> RunConfig:
    """默认运行配置 ← --config 文件 ← 命令行选项"""
    overrides: dict[str, Any] = {}
    if args.config:
        path = Path(args.config).resolve()
        overrides.update(load_data(path))
    for name in RUN_OPTIONS:
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    return bianchi_config.with_run(overrides)


def _meta(command: str, run: RunConfig, flags: dict[str, Any]) -> dict[str, Any]:
    return {
        "command": command,
        "config": run.dict(),
        "convention": CONVENTION_VERSION,
        "flags": flags,
    }


def _envelope(command: str, run: RunConfig, flags: dict[str, Any], report: Any) -> str:
    return dumps(_meta(command, run, flags) | {"report": report})


def run_command(argv: Sequence[str] | None = None) -> int:
    """执行子命令，报告写入标准输出

    ### 返回
        退出码
    """
    run: RunConfig | None = None
    command = "?"
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        run = resolve_run(args)
        report, flags = COMMANDS[command](args, run)
    except MismatchError as e:
        logger.error(f"定理检验不一致: {e}")
        if run is not None:
            print(_envelope(command, run, {}, {"mismatch": str(e), "diff": e.diff}))
        return EXIT_MISMATCH
    except ValidationError as e:
        logger.error(f"配置无效: {e}")
        return EXIT_ERROR
    except BianchiError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_ERROR

    if isinstance(report, str):
        # CSV 报告以注释行携带与 JSON 信封相同的元数据
        text, suffix = csv_header(_meta(command, run, flags)) + report, "csv"
    else:
        body = report.to_json() if hasattr(report, "to_json") else report
        text, suffix = _envelope(command, run, flags, body) + "\n", "json"
    sys.stdout.write(text)
    if args.save:
        path = ensure_dir(REPORT_DIR) / f"{command}.{suffix}"
        path.write_text(text, encoding="utf-8")
        logger.opt(colors=True).info(f"报告已保存到 <y>{path}</y>")
    return EXIT_OK


def main() -> NoReturn:
    sys.exit(run_command())
