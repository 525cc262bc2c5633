"""
Constructions of local Lie algebras and pentads from Cartan-like matrices
"""
