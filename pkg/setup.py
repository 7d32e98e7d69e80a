from setuptools import setup, find_packages

setup(
    name='weakorder',
    version='0.1.0',
    description='Weak orders on permutations, planar binary trees and cube '
                'vertices, and the graded algebras built on them',
    author='weakorder developers',
    license='MIT',
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests', 'tests.*']),
    entry_points={
        'console_scripts': [
            'weakorder=weakorder.cli.main:run'
        ],
    },
    python_requires='>=3.8',
    install_requires=[
        'numpy',
        'networkx>=2.4',
        'setuptools',
    ],
    extras_require={
        'test': ['pytest>=7.0', 'hypothesis'],
    },
    zip_safe=False,
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Operating System :: Unix',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
