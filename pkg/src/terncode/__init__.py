"""Classification of ternary self-orthogonal codes up to monomial equivalence."""

__version__ = "0.1.0"
