"""
Exact experiments on Hankel transforms, continued fractions and Riordan
arrays of Rueppel- and Catalan-type sequences.

See:
https://oeis.org/A036987
https://oeis.org/A005811
"""

# Always prefer setuptools over distutils
from setuptools import setup, find_packages
# To use a consistent encoding
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name='rueppel-lab',
    version='0.1.0',
    description='Hankel transforms, continued fractions and Riordan arrays of Rueppel-type sequences',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='Apache-2.0',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3'
    ],
    keywords='hankel-transform continued-fractions riordan-arrays oeis',
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data={'rueppel_lab': ['fixtures/*.txt']},
    python_requires='>=3.8',
    install_requires=['requests>=2', 'decorator>=4', 'sympy>=1.9',
                      'tomli>=1.1; python_version < "3.11"'],
    entry_points={
        'console_scripts': ['rueppel-lab=bin.cmd:run'],
    },
)
