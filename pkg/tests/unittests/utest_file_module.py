import unittest
import sys
import os
import tempfile
from pathlib import Path
import yaml
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '../../'))
from thetaring import file_module

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'defaults.yml')
with open(DATA, 'r') as file:
  defaults = yaml.safe_load(file)

class GetDefaultValues(unittest.TestCase):
	def test_command_value(self):
		summands = file_module.get_default_value(key='summands', command='identities', primary=defaults, fallback=defaults['RunConfig'])
		self.assertEqual(summands, 3)

		folder = file_module.get_default_value(key='folder', command='tower', primary=defaults, fallback=defaults['RunConfig'])
		self.assertEqual(folder, 'towers')

	def test_fallback(self):
		summands = file_module.get_default_value(key='summands', command='tower', primary=defaults, fallback=defaults['RunConfig'])
		self.assertEqual(summands, 2)

		primes = file_module.get_default_value(key='primes', command='sum', primary=defaults, fallback=defaults['RunConfig'])
		self.assertEqual(primes, [3])

	def test_command_is_case_insensitive(self):
		dateformat = file_module.get_default_value(key='dateformat', command='ALL', primary=defaults, fallback=defaults['RunConfig'])
		self.assertEqual(dateformat, '%Y%m%dT%H%M')

	def test_unknown_key(self):
		with self.assertRaises(ValueError):
			file_module.get_default_value(key='grid', command='all', primary=defaults, fallback=defaults['RunConfig'])

	def test_package_defaults(self):
		package_defaults = file_module.load_defaults()
		self.assertEqual(package_defaults['sum']['primes'], [2, 3, 5, 7, 11, 13])
		self.assertIn('#T0', file_module.get_list_of_placeholders())

class AddFolder(unittest.TestCase):
    def test_basic(self):
        path = file_module.add_folder_to_filename(filename='filename', folder='folder')
        self.assertEqual(path, 'folder/filename')

    def test_empty_file(self):
        path = file_module.add_folder_to_filename(filename='', folder='folder')
        self.assertEqual(path, 'folder')

    def test_empty_folder(self):
        path = file_module.add_folder_to_filename(filename='filename', folder='')
        self.assertEqual(path, 'filename')

    def test_with_extension(self):
        path = file_module.add_folder_to_filename(filename='filename.json', folder='folder')
        self.assertEqual(path, 'folder/filename.json')

class Clean(unittest.TestCase):
    def test_trivial(self):
        filename = file_module.clean(filename='filename', list_of_placeholders=defaults['list_of_placeholders'])
        self.assertEqual(filename, 'filename')

    def test_empty(self):
        filename = file_module.clean(filename='', list_of_placeholders=defaults['list_of_placeholders'])
        self.assertEqual(filename, '')

    def test_placeholders(self):
        for placeholder in ['#Command', '#Primes', '#Level', '#T0']:
            filename = file_module.clean(filename=f'filename_{placeholder}', list_of_placeholders=defaults['list_of_placeholders'])
            self.assertEqual(filename, 'filename')

    def test_combinations(self):
        filename = file_module.clean(filename='thetaring_#Command_#Primes_#T0', list_of_placeholders=defaults['list_of_placeholders'])
        self.assertEqual(filename, 'thetaring')

        filename = file_module.clean(filename='thetaring_#Level__SaveThis#T0_.json', list_of_placeholders=defaults['list_of_placeholders'])
        self.assertEqual(filename, 'thetaring_SaveThis.json')

    def test_package_placeholders(self):
        filename = file_module.clean(filename='report_#Level')
        self.assertEqual(filename, 'report')

class ReplaceObjects(unittest.TestCase):
    def test_all(self):
        names = {'Command': 'tower', 'Primes': '2-3-5', 'Level': None}
        filename = file_module.replace_objects('thetaring_#Command_#Primes_#Level', names)
        self.assertEqual(filename, 'thetaring_tower_2-3-5_#Level')

class ReplaceTime(unittest.TestCase):
    def test_empty(self):
        filename = file_module.replace_times('file_#T0', '%Y', [])
        self.assertEqual(filename, 'file_#T0')

    def test_T0(self):
        filename = file_module.replace_times('file_#T0', '%Y', ['2020-06-05 05:00'])
        self.assertEqual(filename, 'file_2020')

        filename = file_module.replace_times('file_#T0_#Primes', '%Y%m%dT%H%M', ['2020-06-05 05:00'])
        self.assertEqual(filename, 'file_20200605T0500_#Primes')

class AddSuffix(unittest.TestCase):
    def test_all(self):
        filename = file_module.add_suffix('file_#T0', 'ddd')
        self.assertEqual(filename, 'file_#T0_ddd')

        filename = file_module.add_suffix('report.json', '_negative')
        self.assertEqual(filename, 'report_negative.json')

        filename = file_module.add_suffix('', 'ddd')
        self.assertEqual(filename, 'ddd')

        filename = file_module.add_suffix('report.json', '')
        self.assertEqual(filename, 'report.json')

class ReportFilepath(unittest.TestCase):
    def test_template(self):
        path = file_module.report_filepath('thetaring_#Command_#Primes_#T0', 'reports', '%Y%m%d', 'json',
                                           {'Command': 'sum', 'Primes': '2-3'}, '2026-01-02 03:04')
        self.assertEqual(path, Path('reports/thetaring_sum_2-3_20260102.json'))

    def test_unused_placeholders(self):
        path = file_module.report_filepath('thetaring_#Command_#Level', '', '%Y', 'txt',
                                           {'Command': 'all'}, '2026-01-02 03:04')
        self.assertEqual(path, Path('thetaring_all.txt'))

    def test_extension_kept(self):
        path = file_module.report_filepath('my_report.dat', 'out', '%Y', 'json', {}, '2026-01-02')
        self.assertEqual(path, Path('out/my_report.dat'))

class CreateFolder(unittest.TestCase):
    def test_nested(self):
        with tempfile.TemporaryDirectory() as tmp:
            folder = Path(tmp).joinpath('a', 'b')
            file_module.create_folder(folder)
            self.assertTrue(folder.is_dir())
            file_module.create_folder(folder)

if __name__ == '__main__':
	unittest.main()
