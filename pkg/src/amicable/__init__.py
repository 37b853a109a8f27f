"""Amicable numbers: search, generator rules, totient identities, tuples.

Submodules
----------
arith       exact factorization, primality, sigma/phi, symmetric polynomials
sieve       segmented aliquot-sum sieve, pair search, counting function
rules       the classical p/q/r pair-generating rules
identities  shape classification and totient-sum identity checks
tuples      amicable triples and the multiply/multi/feebly variants
catalog     persistent pair catalogs with enrichment and statistics
cli         command-line interface
"""

from . import arith, sieve, rules, identities, tuples, catalog  # noqa: F401

__version__ = "0.1.0"
