"""
Algorithms on fuzzy relations and automata, as plain functions
"""
