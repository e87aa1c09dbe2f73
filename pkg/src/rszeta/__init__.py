"""Archimedean Rankin-Selberg zeta integrals for GL_n x GL_m and SO_{2n+1} x GL_m
evaluated through Mellin-Barnes representations, with exact unramified
counterparts and a suite of identity checks."""
from .errors import (DomainError, InfeasibleContour, InvalidPartition, NonConvergence,
                     PoleError, RSZetaError, UnsupportedRank)
from .mb import MBIntegral, QuadPolicy
from .mellin import u_transform, v_transform
from .params import SpectralParamsA, SpectralParamsB, TorusPoint
from .report import VerificationReport
from .special import bessel_k, gamma, gamma_r, log_gamma
from .whittaker import (whittaker_a_direct, whittaker_a_mellin, whittaker_b_direct,
                        whittaker_b_mellin)
from .zeta import l_factor_gl, l_factor_so, zeta_gl, zeta_so

__version__ = "0.1.0"
