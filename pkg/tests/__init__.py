"""
tests - Test suite for stlc_interp.
"""
