"""cherpoi: exact partition combinatorics, Macdonald polynomials, graded
Poincare series, and a brute-force commutative-algebra verification oracle."""

__version__ = "0.1.0"
