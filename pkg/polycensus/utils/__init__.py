"""Parsing, statistics and worker-pool helpers"""
