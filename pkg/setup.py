from setuptools import setup, find_packages

with open("requirements.txt", "r") as f:
    requirements = f.read().splitlines()

setup(
    name='gentino',
    version='0.1.0',
    packages=find_packages(exclude=['test', 'test.*']),
    package_data={
        'gentino.autloci': ['data/*.csv'],
        'gentino.subcovers': ['data/*.csv'],
    },
    install_requires=requirements,
    entry_points={
        'console_scripts': ['gentino=gentino.cli.main:main'],
    },
    description='Genus 2 curves: invariants, automorphism loci, split Jacobians, Kummer surfaces and factoring.',
    license='MIT',
    keywords='genus 2 hyperelliptic kummer igusa ecm',
)
