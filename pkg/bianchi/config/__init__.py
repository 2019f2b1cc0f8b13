"""本模块提供了运行所需的配置及目录。"""

from .config import BaseConfig as BaseConfig
from .config import BianchiConfig
from .config import RunConfig as RunConfig
from .path import DATA_DIR as DATA_DIR
from .path import LOG_DIR as LOG_DIR
from .path import REPORT_DIR as REPORT_DIR
from .path import ROOT_DIR as ROOT_DIR
from .path import ensure_dir as ensure_dir
from .utils import load_config

bianchi_config = BianchiConfig(**load_config())
"""全部配置"""

core_config = bianchi_config.core
"""日志与调试配置"""

arith_config = bianchi_config.arith
"""精确算术配置"""

limit_config = bianchi_config.limits
"""枚举与搜索的规模上限"""

run_config = bianchi_config.run
"""命令行运行配置的默认值"""
