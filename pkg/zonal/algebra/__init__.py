"""Partitions, symmetric polynomials and Jack polynomials in exact arithmetic."""
