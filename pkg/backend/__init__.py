"""
Backend layer for input loading and result storage
"""
__version__ = "1.0.0"
