"""
Specify the kantele release version.
"""

__version__ = "0.3.0"
