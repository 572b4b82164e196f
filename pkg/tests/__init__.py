"""Test suite"""

