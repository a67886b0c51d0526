from .asymptotic_service import AsymptoticService
from .base_service import BaseService
from .bicrank_service import BicrankService
from .identity_service import IdentityService
from .report_service import ReportService
from .series_service import SeriesService
from .verification_service import VerificationService

__all__ = [
    'AsymptoticService',
    'BaseService',
    'BicrankService',
    'IdentityService',
    'ReportService',
    'SeriesService',
    'VerificationService',
]
