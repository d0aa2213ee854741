#!/usr/bin/env python

import os
import setuptools

here = os.path.abspath(os.path.dirname(__file__))
exec(open(os.path.join(here, 'thetaring/version.py')).read())

setuptools.setup(
    name        = 'thetaring',
    description = 'thetaring - exact theta-ring calculus, the root of unity obstruction for cyclotomic rings and the height one Lubin-Tate tower',
    version = __version__,
    license = 'GPLv2',
    install_requires = [
        'numpy',
        'scipy',
        'pandas',
        'pyyaml',
        'sympy>=1.12'
    ],
    packages = setuptools.find_packages(exclude=['tests', 'tests.*']),
    package_data = {'thetaring': ['defaults.yml']},
    include_package_data = True,
    setup_requires = ['setuptools_scm'],
    tests_require = ['pytest', 'hypothesis'],
    entry_points = {'console_scripts': ['thetaring=thetaring.cli:run']},
    scripts = []
)
