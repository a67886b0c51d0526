from ..base import LabCommand
from ...validators.run_config_validator import EXPAND_TARGETS


class Command(LabCommand):
    help = 'Expande una función generadora (p2, diff2, diff3, diff4 o table) hasta el orden N'
    command_name = 'expand'

    def add_arguments(self, parser):
        parser.add_argument('target', choices=EXPAND_TARGETS)
        parser.add_argument('--modulus', type=int,
                            help='Con table: conteos por clase de residuo módulo k')
        self.add_common_arguments(parser)
