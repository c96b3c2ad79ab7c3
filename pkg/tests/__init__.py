"""
Test suite for the pairdist package and CLI.
"""
