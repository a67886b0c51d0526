"""
Pruebas de integración para los comandos de gestión expand, verify y threshold.
"""
import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


class ExpandCommandTestCase(SimpleTestCase):
    """Pruebas para el comando expand"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.out = StringIO()

    def test_expand_diff2_text(self):
        call_command('expand', 'diff2', '--order', '8', stdout=self.out)
        self.assertEqual(self.out.getvalue(), '1,-2,1,-2,4,-4,5,-6,9\n')

    def test_expand_p2_csv(self):
        call_command('expand', 'p2', '--order', '4', '--format', 'csv', stdout=self.out)
        lines = self.out.getvalue().splitlines()
        self.assertEqual(lines[0], 'schema_version,1')
        self.assertEqual(lines[-1], '4,20')

    def test_expand_table_text(self):
        call_command('expand', 'table', '--order', '1', stdout=self.out)
        self.assertEqual(self.out.getvalue().splitlines(), ['0|0|1', '1|-2|1,1,-2,1,1'])

    def test_expand_residue_counts(self):
        call_command('expand', 'table', '--order', '3', '--modulus', '5', stdout=self.out)
        self.assertEqual(self.out.getvalue().splitlines()[3], '3: 6,1,1,1,1')

    def test_expand_to_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'diff3.json')
            call_command('expand', 'diff3', '--order', '5', '--format', 'json',
                         '--output', path, stdout=self.out)
            with open(path, encoding='utf-8') as handle:
                payload = json.load(handle)
        self.assertEqual([row['coefficient'] for row in payload['rows']],
                         ['1', '-4', '2', '10', '-13', '0'])
        self.assertEqual(self.out.getvalue(), '')

    def test_missing_order(self):
        with self.assertRaises(CommandError) as context:
            call_command('expand', 'diff4', stdout=self.out)
        self.assertEqual(context.exception.returncode, 2)

    def test_table_limit(self):
        with self.assertRaises(CommandError) as context:
            call_command('expand', 'table', '--order', '100000', stdout=self.out)
        self.assertEqual(context.exception.returncode, 3)


class VerifyCommandTestCase(SimpleTestCase):
    """Pruebas para el comando verify"""

    def setUp(self):
        """Configuración inicial para las pruebas"""
        self.out = StringIO()

    def test_verify_t2(self):
        call_command('verify', 't2', '--order', '200', stdout=self.out)
        output = self.out.getvalue()
        self.assertIn('verify t2: pass', output)
        self.assertIn('excepciones encontradas: [5]', output)

    def test_verify_t4_json(self):
        call_command('verify', 't4', '--order', '200', '--format', 'json', stdout=self.out)
        summary = json.loads(self.out.getvalue())['summary']
        self.assertEqual(summary['exceptions_found'], [4, 20, 56])
        self.assertEqual(summary['exceptions_published'], [4, 20])
        self.assertEqual(summary['exceptions_observed'], [56])
        self.assertTrue(summary['passed'])

    def test_verify_t4_text_lists_observed_zero(self):
        call_command('verify', 't4', '--order', '60', stdout=self.out)
        output = self.out.getvalue()
        self.assertIn('verify t4: pass', output)
        self.assertIn('excepciones observadas: [56]', output)
        self.assertIn('excepciones encontradas: [4, 20, 56]', output)

    def test_verify_t1_with_table_crosscheck(self):
        call_command('verify', 't1', '--order', '30', stdout=self.out)
        self.assertIn('verify t1: pass', self.out.getvalue())

    def test_verify_mod5(self):
        call_command('verify', 'mod5', '--order', '39', stdout=self.out)
        self.assertIn('verify mod5: pass', self.out.getvalue())

    def test_verify_asymptotic_range(self):
        call_command('verify', 'asy3', '--range', '1', '20', stdout=self.out)
        self.assertIn('verify asy3: pass', self.out.getvalue())

    def test_unknown_theorem(self):
        with self.assertRaises(CommandError):
            call_command('verify', 't3', stdout=self.out)


class ThresholdCommandTestCase(SimpleTestCase):
    """Pruebas para el comando threshold"""

    def test_threshold_mod3(self):
        out = StringIO()
        call_command('threshold', '--modulus', '3', '--range', '104', '112',
                     '--format', 'json', stdout=out)
        summary = json.loads(out.getvalue())['summary']
        self.assertEqual(summary['last_nonpositive'], 107)
        self.assertEqual(summary['stable_from'], 108)

    def test_threshold_requires_range(self):
        with self.assertRaises(CommandError) as context:
            call_command('threshold', '--modulus', '3', stdout=StringIO())
        self.assertEqual(context.exception.returncode, 2)
