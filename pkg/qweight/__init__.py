"""qweight - quantum weight enumerators and QMDS feasibility.

Layers:
    exactmath    - binomials, Krawtchouk polynomials, bivariate forms
    enumerators  - weight distributions, closed forms, transforms
    oracle       - stabilizer codes and brute-force weights
    feasibility  - Singleton, length and shadow layers, families, catalog
    cli          - command-line front end
"""
__version__ = "1.0.0"
