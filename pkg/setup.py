import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

REQUIRED_PACKAGES = [
    'requests', 'packaging', 'numpy>=1.17', 'networkx>=2.4'
]

setuptools.setup(
    name="locochrome",
    version="0.1.0",
    author="locochrome contributors",
    description="Exact local, directed local and fractional chromatic numbers, with scripted checks of the bounds that relate them.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(
        exclude=["tests", "tests.graphs", "tests.solvers"]),
    python_requires=">=3.8",
    install_requires=REQUIRED_PACKAGES,
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["locochrome=locochrome.cli:main"],
    },
    classifiers=(
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries :: Python Modules',
    ),
    license="Apache-2.0",
    keywords=['graph coloring', 'local chromatic number', 'fractional chromatic number',
              'linear programming', 'orientation'],
)
