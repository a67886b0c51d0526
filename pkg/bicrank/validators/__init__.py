from .base_validator import BaseValidator
from .eta_quotient_validator import EtaQuotientValidator
from .run_config_validator import RunConfigValidator

__all__ = ['BaseValidator', 'EtaQuotientValidator', 'RunConfigValidator']
