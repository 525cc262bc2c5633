"""
File helpers shared by the input loader and result storage
"""
