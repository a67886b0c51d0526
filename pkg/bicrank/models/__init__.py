"""
Tipos de dominio del laboratorio. No son modelos del ORM: el proyecto no usa
base de datos y todos los valores son inmutables.
"""
from .eta import EtaQuotientSpec, PochhammerFactor
from .laurent import BicrankTable, ClassCountTable, LaurentPoly
from .numeric import ExactRational, HighPrecReal, RationalAngle, precision_context
from .reports import (
    AsymptoticVerdict,
    BesselBoundsVerdict,
    CheckReport,
    DominanceReport,
    DominanceRow,
    ExponentialSum,
    Failure,
    IdentityVerdict,
    Report,
    SignReport,
    SignVerdict,
)
from .run_config import RunConfig
from .series import PowerSeries

__all__ = [
    'AsymptoticVerdict',
    'BesselBoundsVerdict',
    'BicrankTable',
    'CheckReport',
    'ClassCountTable',
    'DominanceReport',
    'DominanceRow',
    'EtaQuotientSpec',
    'ExactRational',
    'ExponentialSum',
    'Failure',
    'HighPrecReal',
    'IdentityVerdict',
    'LaurentPoly',
    'PochhammerFactor',
    'PowerSeries',
    'RationalAngle',
    'Report',
    'RunConfig',
    'SignReport',
    'SignVerdict',
    'precision_context',
]
