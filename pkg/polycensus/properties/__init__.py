"""Census properties: sample spaces and predicates"""
