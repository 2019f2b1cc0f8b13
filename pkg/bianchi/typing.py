"""本模块集合了常用类型"""

from argparse import Namespace as Namespace

from bianchi.arith import CycloNum as CycloNum
from bianchi.characters import CharPair as CharPair
from bianchi.characters import HeckeChar as HeckeChar
from bianchi.characters import InfinityType as InfinityType
from bianchi.eigensystem import PairType as PairType
from bianchi.eigensystem import TypeTag as TypeTag
from bianchi.eigensystem import Weight as Weight
from bianchi.padic import Direction as Direction
from bianchi.padic import PadicEmbedding as PadicEmbedding
from bianchi.quadfield import QuadField as QuadField
from bianchi.quadfield import QuadIdeal as QuadIdeal
from bianchi.quadfield import QuadInt as QuadInt
