"""
Local Lie algebras and their minimal graded expansions
"""
