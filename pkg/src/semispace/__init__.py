"""Semi-open set calculus and semi-separation axioms on finite topological spaces."""

__version__ = "0.1.0"
