# -*- coding: utf-8 -*-
#

from setuptools import setup


long_description = """
lpp-growth
==========

lpp-growth computes growth-diagram RSK on integer matrices, samples geometric last
passage percolation in full- and half-space, and evaluates the exact Schur and
Pfaffian Schur process measures that describe last passage times along down-right
paths. The ``lpp`` command compares the two sides exactly or by Monte Carlo.
"""


for line in open('lpp_growth/__init__.py'):
    if line.startswith("__version__"):
        version = line.split("=")[1].strip()[1:-1]


setup(
    name='lpp-growth',
    zip_safe=False,
    install_requires=[
        'numpy>=1.17',
        'pyyaml',
        'tqdm~=4.23',
    ],
    python_requires='>=3.8',
    version=version,
    packages=['lpp_growth'],
    author='lpp-growth authors and contributors',
    description='Growth diagrams, geometric last passage percolation, and Schur process measures',
    long_description=long_description,
    license='MIT',
    entry_points={
        'console_scripts': ['lpp = lpp_growth.cli:main'],
    },
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics'
    ]
)
