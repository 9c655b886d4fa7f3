# setup.py
from setuptools import setup, find_packages

setup(
    name="basis_forge",
    version="1.0.0",
    description="Bases of the integers with a prescribed representation function",
    packages=find_packages(include=["basis_forge", "basis_forge.*"]),
    python_requires=">=3.10",
    install_requires=[
        "pydantic>=2.7.0",
        "pydantic-settings>=2.2.1",
        "python-dotenv>=1.0.1",
    ],
    extras_require={
        "test": [
            "pytest>=8.2.0",
            "pytest-cov>=5.0.0",
            "hypothesis>=6.100.0",
        ],
    },
    entry_points={
        'console_scripts': [
            'basis-forge=basis_forge.main:main',
        ],
    },
)
