"""Bianchi Eisenstein 特征系统的精确计算与定理检验

## 快捷导入

为方便使用，本模块从子模块导入了部分内容，以下内容可以直接通过本模块导入:

- `QuadField`
- `QuadIdeal`
- `HeckeChar`
- `CharPair`
- `Weight`
- `Eigensystem`
- `eis_eigensystem`
- `involution`
- `predict_dims`
- `stabilize`
- `recover_chars`
- `bc_pair`
"""

from bianchi.log import logger as logger  # isort:skip

from bianchi.basechange import bc_pair as bc_pair
from bianchi.characters import CharPair as CharPair
from bianchi.characters import HeckeChar as HeckeChar
from bianchi.eigensystem import Eigensystem as Eigensystem
from bianchi.eigensystem import Weight as Weight
from bianchi.eigensystem import eis_eigensystem as eis_eigensystem
from bianchi.eigensystem import involution as involution
from bianchi.eigensystem import predict_dims as predict_dims
from bianchi.padic import stabilize as stabilize
from bianchi.quadfield import QuadField as QuadField
from bianchi.quadfield import QuadIdeal as QuadIdeal
from bianchi.recovery import recover_chars as recover_chars
from bianchi.version import __version__ as __version__
