"""Jack and zonal polynomials, matrix-argument hypergeometric functions and
closed-form random-matrix averages, each checked against Monte-Carlo sampling."""

__version__ = "0.1.0"
