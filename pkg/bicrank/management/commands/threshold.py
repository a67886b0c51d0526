from ..base import LabCommand


class Command(LabCommand):
    help = 'Busca desde qué n el término principal domina a la cota de error'
    command_name = 'threshold'

    def add_arguments(self, parser):
        parser.add_argument('--modulus', type=int, choices=[3, 4], required=True)
        self.add_common_arguments(parser)

    def get_target(self, options):
        return 'dominance'
