from setuptools import find_packages, setup
import warnings

DEPENDENCY_PACKAGE_NAMES = ["numpy", "sympy", "tqdm"]


def check_dependencies():
    missing_dependencies = []
    for package_name in DEPENDENCY_PACKAGE_NAMES:
        try:
            __import__(package_name)
        except ImportError:
            missing_dependencies.append(package_name)

    if missing_dependencies:
        warnings.warn(
            'Missing dependencies: {}. Create the environment from '
            'environment.yml or pip install them.'.format(missing_dependencies))


with open("README.md", "r") as fh:
    long_description = fh.read()

check_dependencies()

setup(
    name="superspecial",
    version="0.1.0",
    packages=find_packages(exclude=('test', 'examples')),
    python_requires=">=3.8.0",
    install_requires=["numpy", "sympy", "tqdm"],
    extras_require={"test": ["pytest", "hypothesis"]},
    description="Neron-Severi lattice and Chern class map of a superspecial abelian surface",
    long_description=long_description,
    long_description_content_type="text/markdown",
    entry_points={
        "console_scripts": ["superspecial-verify = superspecial.verifier_cli:main"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
    ],
)
