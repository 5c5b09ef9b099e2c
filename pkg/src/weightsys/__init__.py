"""Exact-arithmetic weight systems on chord diagrams and their relatives.

The library computes weight systems coming from Lie algebras (sl(2) and the
universal gl/sl weight systems on permutations), the classical 4-invariants
of graphs (chromatic, weighted chromatic, symmetrized chromatic, Abel,
interlace, transition, skew characteristic), their extensions to
delta-matroids, and the graded Hopf-algebra machinery (products, coproducts,
primitive projection, 4-term quotient ranks) tying everything together.

All arithmetic is exact: coefficients are ``fractions.Fraction`` throughout,
and every identity asserted by the test suite holds on the nose.
"""

__version__ = "0.1.0"
