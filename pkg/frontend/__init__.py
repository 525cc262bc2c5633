"""
Frontend layer: the command line
"""
