import itertools
import os
from pathlib import Path
from typing import Any

from bianchi.exception import ConfigError
from bianchi.utils.utils import load_data

CONFIG_ENV = "BIANCHI_CONFIG"
"""配置文件路径环境变量"""


def load_config() -> dict[str, Any]:
    """加载配置。

    ### 说明
        环境变量 `BIANCHI_CONFIG` 指定的文件优先

        其次按顺序查找: `bianchi.toml`，`bianchi.config.toml`，`bianchi.yaml`，`bianchi.config.yaml`，`bianchi.yml`，`bianchi.config.yml`，`bianchi.json`，`bianchi.config.json`

        当以上文件均不存在时，会尝试读取 `pyproject.toml` 中的 `tool.bianchi` 配置
    """
    if env_file := os.environ.get(CONFIG_ENV):
        path = Path(env_file).resolve()
        if not path.is_file():
            raise ConfigError(f"{CONFIG_ENV} 指向的配置文件不存在: {path}")
        return load_data(path)

    file_name = ("bianchi", "bianchi.config")
    file_type = ("toml", "yaml", "yml", "json")
    for type, name in itertools.product(file_type, file_name):
        file = Path(f"{name}.{type}").resolve()
        if file.is_file():
            return load_data(file)

    pyproject = Path("pyproject.toml").resolve()
    if not pyproject.is_file():
        return {}
    return load_data(pyproject).get("tool", {}).get("bianchi", {})
