"""本模块提供了特征对的 Eisenstein 特征系统、无穷型分类与上同调维数"""

from .dims import DimMode as DimMode
from .dims import DimReport as DimReport
from .dims import Flavor as Flavor
from .dims import LevelDescriptor as LevelDescriptor
from .dims import boundary_dims_bruteforce as boundary_dims_bruteforce
from .dims import candidate_pairs as candidate_pairs
from .dims import compare_boundary as compare_boundary
from .dims import predict_dims as predict_dims
from .eigen import CSV_COLUMNS as CSV_COLUMNS
from .eigen import Eigensystem as Eigensystem
from .eigen import HeckeEigenvalues as HeckeEigenvalues
from .eigen import HeckePolynomial as HeckePolynomial
from .eigen import LevelCase as LevelCase
from .eigen import UEigenvalue as UEigenvalue
from .eigen import eis_eigensystem as eis_eigensystem
from .eigen import hecke_polynomial as hecke_polynomial
from .eigen import involution as involution
from .eigen import iwahori_u_eigenvalues as iwahori_u_eigenvalues
from .eigen import level_case as level_case
from .local import CosetOracle as CosetOracle
from .local import local_character as local_character
from .local import local_dim_oracle as local_dim_oracle
from .local import local_invariant_dim as local_invariant_dim
from .types import ADMISSIBLE_TAGS as ADMISSIBLE_TAGS
from .types import InfinityTypeClass as InfinityTypeClass
from .types import PairType as PairType
from .types import TypeTag as TypeTag
from .types import Weight as Weight
from .types import classify as classify
from .types import classify_types as classify_types
from .types import pair_type as pair_type
