"""
utils package.
"""
