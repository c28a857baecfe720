#!/usr/bin/env python3
"""This is the setup file for package creation and installation."""
import setuptools
import sys


# needed packages
REQUIRES = [
    'numpy >= 1.17',
    'tldextract >= 3.1',
    'tqdm',
    'scikit-learn >= 0.24',
]

EXTRAS = {
    'test': ['pytest'],
}


def run_setup(args):
    """install the package and its console script."""
    setuptools.setup(
        name='oadsmine',
        version="0.1",
        description='oadsmine',
        long_description='Extract URIs from scholarly full texts, classify them as open-access '
                         'data and software or not, and report their development over time.',
        packages=setuptools.find_packages(exclude=['tests']),
        package_data={
            'oadsmine': ['data/*.json'],
            'oadsmine.shared': ['*.tmpl'],
        },
        include_package_data=True,
        zip_safe=False,
        python_requires='>=3.8',
        install_requires=REQUIRES,
        extras_require=EXTRAS,
        script_name='setup.py',
        script_args=args,
        entry_points={
            'console_scripts': [
                'oadsmine=oadsmine.cli.oadsmine:main',
            ],
        },
    )


# check for execution
if __name__ == "__main__":
    run_setup(sys.argv[1:])
