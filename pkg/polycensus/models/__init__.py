"""Domain value types"""
