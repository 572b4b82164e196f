"""Command-line runs of the census acceptance grid"""
