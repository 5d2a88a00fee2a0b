"""krw: exact computations in translates of the Koras-Russell threefold"""

__version__ = "0.1.0"
