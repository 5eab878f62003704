"""
Immaculate Hecke Toolkit - Test Suite
"""
