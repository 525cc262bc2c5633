"""
Processing layer for pentads, graded Lie algebras and their constructions
"""
