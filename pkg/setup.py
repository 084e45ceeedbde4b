#! /usr/bin/env python3

from setuptools import setup

import sys
sys.path.insert(0, 'src/planturan')
import version


setup(
    name='PlanTuran',
    version=version.ptr_version,
    description='Planar Turan numbers of H_k and F_k',
    long_description='',
    packages = ['planturan'],
    package_dir = {'planturan' : 'src/planturan'},
    python_requires='>=3.7',
    install_requires=['numpy', 'networkx>=2.4', 'joblib'],
    extras_require={
        'tests': ['pytest'],
        'docs': ['sphinx', 'sphinx_rtd_theme', 'sphinx_automodapi'],
    },
    entry_points={'console_scripts': ['planturan = planturan.cli:main']},
    zip_safe=False,
)
