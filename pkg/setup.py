from setuptools import setup



setup(
    name='frey-level-lowering',
    version='0.1.0',
    description='Exact arithmetic checks for the mod-ell level-lowering of y^2 = x(x - 3^ell)(x - 3^ell - 1)',
    python_requires='>=3.8',
    packages=['model', 'module'],
    py_modules=['run'],
    install_requires=[
        'sympy>=1.9',
        'PyYAML>=5.4',
    ],
    extras_require={
        'test': ['pytest>=7.0'],
    },
    entry_points={
        'console_scripts': ['frey-verify=run:main'],
    },
)
