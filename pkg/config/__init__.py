"""
Configuration package for the graph machine.
"""
