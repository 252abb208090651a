"""Index, semi-invariants and Poisson-commutative subalgebras of Lie algebras."""
__version__ = "0.1.0"
