import setuptools

with open('README.md', 'r') as f:
    long_description = f.read()

dependencies = [
    'colorama>=0.4,<1',
    'lark>=1.1,<2',
    'networkx>=2.5,<4',
    'pydot>=1.4,<3',
    'pyyaml>=5.3.1,<7',
    'ray[default]>=1.5.2,<2',
]

test_dependencies = [
    'hypothesis>=6,<7',
    'pytest==6.1.*',
    'pytest-cov==2.10.*',
    'pytest-asyncio==0.14.*',
]

setuptools.setup(
    name='moncat',
    version='0.1.0',
    description=(
        'Workbench for regular and context-free monoidal languages '
        'of string diagrams'
    ),
    long_description=long_description,
    long_description_content_type='text/markdown',
    keywords=(
        'string-diagrams monoidal-categories automata context-free-grammars '
        'optics hypergraphs python'
    ),
    packages=setuptools.find_packages(exclude=('test', 'test.*')),
    package_data={'moncat.syntax': ['grammar.lark']},
    license="Apache 2.0",
    entry_points={
        'console_scripts': ['moncat=moncat.cli.__main__:main'],
    },
    python_requires='>=3.7',
    install_requires=dependencies,
    extras_require={
        'test': test_dependencies,
    },
    setup_requires=[
        'pytest-runner',
    ],
    tests_require=test_dependencies,
)
