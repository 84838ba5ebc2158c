"""Finite BZ-lattices: construction, classification, identities and congruences."""

from .lattice import FinLattice
from .structures import BZAlgebra, classify, element_sets
from .sums import canonical_aol, chain, hsum, horizontal_sum, mo, ordinal_sum, product
from .terms import identity, parse_identity, parse_term, satisfies
from .congruence import Partition, congruence_lattice, irreducibility
from .subalg import generate, isomorphic, quotient, singleton_class
from . import catalog

__all__ = [
    "FinLattice", "BZAlgebra", "classify", "element_sets", "canonical_aol", "chain",
    "hsum", "horizontal_sum", "mo", "ordinal_sum", "product", "identity",
    "parse_identity", "parse_term", "satisfies", "Partition", "congruence_lattice",
    "irreducibility", "generate", "isomorphic", "quotient", "singleton_class", "catalog",
]
__version__ = "0.1.0"
