"""本模块由特征值样本恢复特征对，并统计样本对射线类的覆盖"""

from .density import DENSITY_LIMIT as DENSITY_LIMIT
from .density import DensityReport as DensityReport
from .density import density_modulus as density_modulus
from .density import density_report as density_report
from .density import sufficient_density as sufficient_density
from .samples import Sample as Sample
from .samples import SampleSet as SampleSet
from .search import Branch as Branch
from .search import Candidate as Candidate
from .search import RecoveryReport as RecoveryReport
from .search import SearchSpace as SearchSpace
from .search import branch_of as branch_of
from .search import expected_pairs as expected_pairs
from .search import recover_chars as recover_chars
from .search import recovery_report as recovery_report
from .search import search_candidates as search_candidates
from .search import violates_weight_guard as violates_weight_guard
