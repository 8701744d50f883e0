"""Random-matrix samplers: Ginibre, Haar and Wishart/Laguerre ensembles."""
