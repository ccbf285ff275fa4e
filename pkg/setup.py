
from setuptools import setup
from setuptools import find_packages

commands = [
    'dual',
    'member',
    'contains',
    'bipolar_check',
    'complete',
    'separate',
    'lemma_witness',
    'trivial',
    'family_member',
    'normalize_family',
    'hat_equal',
    'represent_2d',
    'justifiable_k',
    'evren_check',
    'implied',
    'multi_utility',
    'transitivity_cert',
    'aa_implied',
    'aa_multi_utility',
    'oracle_compare',
]

setup(
    name = 'conecalc',
    license = 'MIT',
    author = 'conecalc developers',
    description = 'Exact convex-cone calculus and preference representations',
    long_description = 'Exact convex-cone calculus: dual cones, representation families, multi-utility representations',
    keywords = 'convex cone, dual cone, double description, multi-utility, exact arithmetic',
    packages = find_packages(exclude=['test']),
    use_scm_version = {'write_to': 'conecalc/_version.py'},
    setup_requires = ['setuptools_scm'],
    install_requires = ['click', 'pyyaml', 'mergedeep', 'numpy', 'tqdm'],
    entry_points = {
        'console_scripts':
            ['conecalc = conecalc.cli.conecalc:main'] +
            ['conecalc_{0:s} = conecalc.cli.conecalc_{0:s}:main'.format(c) for c in commands],
        })
