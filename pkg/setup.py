from setuptools import setup

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("requirements.txt") as requirement_file:
    requirements = requirement_file.read().split()

setup(
    name='palwidth',
    version='0.1',
    description="Palindromic width of free nilpotent groups: exact arithmetic, decompositions and certificates",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
    ],
    install_requires=requirements,
    extras_require={"test": ["pytest>=7.0", "hypothesis>=6.0"]},
    packages=["PalWidth"],
    entry_points={"console_scripts": ["palwidth = PalWidth.cli:Main"]},
)
