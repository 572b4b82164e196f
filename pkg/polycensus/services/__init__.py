"""Algorithms and census services"""
