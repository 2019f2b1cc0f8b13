"""本模块实现了 Q 上 theta 级数到虚二次域的基变换及其 Eisenstein 特征对"""

from .lift import BaseChangeReport as BaseChangeReport
from .lift import bc_pair as bc_pair
from .lift import bc_verify as bc_verify
from .lift import bianchi_bc_eigenvalue as bianchi_bc_eigenvalue
from .lift import within_eisenstein_bound as within_eisenstein_bound
from .stabilize import BcStabilizationReport as BcStabilizationReport
from .stabilize import bc_stabilizations as bc_stabilizations
from .stabilize import classical_label as classical_label
from .theta import BaseChangeInput as BaseChangeInput
from .theta import DirichletData as DirichletData
from .theta import ThetaData as ThetaData
from .theta import dirichlet_from_hecke as dirichlet_from_hecke
from .theta import phi_z_value as phi_z_value
from .theta import theta_coefficients as theta_coefficients
from .theta import theta_data as theta_data
