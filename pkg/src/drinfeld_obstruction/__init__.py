"""Local-global obstruction groups S(a, K) for rank-2 Drinfeld modules, computed exactly."""
__version__ = "0.1.0"
