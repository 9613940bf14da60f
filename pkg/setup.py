#!/usr/bin/env python
# -*- coding: utf-8 -*-


try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


with open('README.rst', 'rb') as readme_file:
    readme = readme_file.read().decode('utf8')

with open('HISTORY.rst', 'rb') as history_file:
    history = history_file.read().decode('utf8')

requirements = [
    "marshmallow>=3.13.0,<4.0",
    "sympy>=1.9",
]

setup(
    name='mlvlab',
    version='0.1.0',
    description="Exact lab for special values of motivic L-functions.",
    long_description=readme + '\n\n' + history,
    author="mlvlab contributors",
    author_email='mlvlab@users.noreply.github.com',
    packages=['mlvlab'],
    package_data={'mlvlab': ['data/*.json', 'data/varieties/*.json']},
    include_package_data=True,
    python_requires='>=3.7',
    install_requires=requirements,
    entry_points={
        'console_scripts': ['mlv = mlvlab.cli:main'],
    },
    license="MIT",
    zip_safe=False,
    keywords='L-function zeta motive Hodge period exact arithmetic',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
