"""本模块提供了代数 Hecke 特征、剩余类特征与射线类群"""

from .hecke import HeckeChar as HeckeChar
from .hecke import InfinityType as InfinityType
from .hecke import build_char as build_char
from .hecke import char_algebra as char_algebra
from .hecke import chars_of_conductor as chars_of_conductor
from .hecke import check_unit_compatibility as check_unit_compatibility
from .hecke import enumerate_chars as enumerate_chars
from .hecke import eval_char as eval_char
from .pair import CharPair as CharPair
from .rayclass import RayClassGroup as RayClassGroup
from .rayclass import ray_classes as ray_classes
from .residue import ResidueCharacter as ResidueCharacter
from .residue import ResidueGroup as ResidueGroup
from .residue import residue_group as residue_group
from .residue import unit_group_order as unit_group_order
