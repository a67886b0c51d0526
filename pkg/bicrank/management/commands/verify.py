from ..base import LabCommand
from ...validators.run_config_validator import VERIFY_TARGETS


class Command(LabCommand):
    help = 'Verifica un teorema, la estructura mod 5, el catálogo de identidades o las cotas asintóticas'
    command_name = 'verify'

    def add_arguments(self, parser):
        parser.add_argument('target', choices=VERIFY_TARGETS)
        self.add_common_arguments(parser)
