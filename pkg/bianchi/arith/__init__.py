"""本模块提供了有理数与分圆域上的精确算术"""

from .cyclo import CycloNum as CycloNum
from .cyclo import cyclo_arith as cyclo_arith
from .cyclo import cyclotomic_degree as cyclotomic_degree
from .cyclo import cyclotomic_modulus as cyclotomic_modulus
