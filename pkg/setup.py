"""
Build instructions for setuptools. Install manually with
`pip install .`
"""

from setuptools import setup


def readme():
    """
    :return: Content of README.md
    """
    with open("README.md") as file:
        return file.read()


setup(
    name="tdcontract",
    version="0.1.0",
    description="Deciding whether edge contractions reduce the total domination number of a graph.",
    long_description=readme(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="graphs total domination edge contraction blocker",
    license="MIT",
    packages=[
        "tdcontract",
        "tdcontract.graph",
        "tdcontract.oracle",
        "tdcontract.solvers",
        "tdcontract.gadgets",
        "tdcontract.verification",
        "tdcontract.cli",
    ],
    install_requires=[
        "networkx>=2.6",
        "python-sat>=0.1.7.dev1",
        "rich>=12.5.1",
    ],
    entry_points={
        "console_scripts": ["tdcontract=tdcontract.__main__:main"],
    },
    python_requires=">=3.8",
    include_package_data=True,
    zip_safe=False,
)
