"""
Weakly Directed Walks - exact enumeration and sampling of lattice walks.

Generating functions of weakly directed self-avoiding walks on the square
lattice (horizontal and diagonal models), certified growth-constant bounds,
complex zeros of bridge denominators and Boltzmann sampling.
"""

from weakly_directed_walks.config.settings import Settings

__version__ = Settings.CLIENT_VERSION
__author__ = "derbe"
