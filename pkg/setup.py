#!/usr/bin/env python3
from setuptools import find_packages, setup

setup(
    name='gluepo',
    version='0.3.0',
    python_requires='>=3.8',
    packages=find_packages(exclude=("tests",)),
    package_data={'gluepo': ['fixtures/*']},
    install_requires=['networkx', 'lark', 'hypothesis', 'humanfriendly', 'coolname', 'nose2'],
    setup_requires=['wheel'],
    # Metadata
    author="The gluepo authors",
    license="Apache License 2.0",
    description="Partial order and glued partial order semantics for Petri nets with inhibitor arcs, "
                "channeled transition systems and asynchronous automata",
    long_description=open('README.rst').read(),
    keywords=["petri nets", "inhibitor arcs", "partial orders", "concurrency", "semantics"],
    classifiers=[
        # How mature is this project? Common values are
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Intended Audience :: Developers',

        'License :: OSI Approved :: Apache Software License',

        'Operating System :: OS Independent',

        'Topic :: Scientific/Engineering',

        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    entry_points={
        'console_scripts': [
            'gluepo=gluepocli.cli:run',
        ]
    },
    extras_require={}

)
