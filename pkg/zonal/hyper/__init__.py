"""Hypergeometric series, closed-form averages, duality quadrature and the rank-one density."""
