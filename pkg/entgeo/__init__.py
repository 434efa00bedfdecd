"""
entgeo: geometric pair-averaged measures of multipartite qubit entanglement.
"""
