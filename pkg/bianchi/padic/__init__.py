"""本模块提供了 p 进嵌入、赋值、p-稳定化的斜率与 Eisenstein 族的同余检验"""

from .embedding import PadicEmbedding as PadicEmbedding
from .embedding import build_embedding as build_embedding
from .embedding import valuation as valuation
from .family import CongruenceReport as CongruenceReport
from .family import CongruenceWitness as CongruenceWitness
from .family import Direction as Direction
from .family import family_congruence as family_congruence
from .family import family_congruence_report as family_congruence_report
from .family import family_shift as family_shift
from .family import twist_pair as twist_pair
from .number import PadicNum as PadicNum
from .number import Valuation as Valuation
from .stabilize import CHOICES as CHOICES
from .stabilize import EigenvarietyReport as EigenvarietyReport
from .stabilize import PStabilization as PStabilization
from .stabilize import Root as Root
from .stabilize import SlopeReport as SlopeReport
from .stabilize import eigenvariety_report as eigenvariety_report
from .stabilize import expected_slopes as expected_slopes
from .stabilize import pair_embedding as pair_embedding
from .stabilize import pair_value_order as pair_value_order
from .stabilize import stabilization_label as stabilization_label
from .stabilize import stabilize as stabilize
