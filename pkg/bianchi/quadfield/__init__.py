"""本模块提供了虚二次域的元素、理想与素分解"""

from .factor import IdealFactorization as IdealFactorization
from .factor import PrimeSplitting as PrimeSplitting
from .factor import SplitKind as SplitKind
from .factor import canonical_generator as canonical_generator
from .factor import divisors as divisors
from .factor import factor_ideal as factor_ideal
from .factor import ideal_valuation as ideal_valuation
from .factor import is_prime_ideal as is_prime_ideal
from .factor import normalize_associate as normalize_associate
from .factor import prime_ideals as prime_ideals
from .factor import prime_of as prime_of
from .factor import split_prime as split_prime
from .field import CLASS_NUMBER_ONE as CLASS_NUMBER_ONE
from .field import QuadField as QuadField
from .field import QuadInt as QuadInt
from .field import kronecker as kronecker
from .field import omega_cyclo as omega_cyclo
from .ideal import QuadIdeal as QuadIdeal
