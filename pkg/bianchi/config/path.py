"""本模块定义了运行所需的文件目录"""

from pathlib import Path

# ========== 根目录 ==========

ROOT_DIR = Path.cwd()
"""工作根目录"""

# ========== 文件目录 ==========

DATA_DIR = ROOT_DIR / "data"
"""数据保存目录"""

LOG_DIR = ROOT_DIR / "logs"
"""日志保存目录"""

REPORT_DIR = DATA_DIR / "reports"
"""报告保存目录"""


def ensure_dir(path: Path) -> Path:
    """确保目录存在，并返回该目录。

    目录只在写入文件时创建。
    """
    path.mkdir(parents=True, exist_ok=True)
    return path
