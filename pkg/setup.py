from setuptools import setup

setup(
    name='annseq',
    version='1.0',
    packages=['annseq'],
    install_requires=[
        'toml',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': [
            'annseq=annseq.cli:main'
        ]
    },
    description='Enumeration of sequences satisfying the Curtis annihilation conditions',
)
