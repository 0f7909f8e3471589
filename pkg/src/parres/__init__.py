"""parres: graded free resolutions and Koszul homology over quotient rings.

Computes over R = S/I with S a polynomial ring over a prime field GF(p) and I
a homogeneous ideal: Groebner bases and syzygies, Koszul complexes and their
homology, minimal graded free resolutions and Betti tables, mapping-cone
resolutions of parameter ideals, and invariants (depth, Cohen-Macaulay
defect, local cohomology lengths, standard systems of parameters).  Symbolic
results are cross-checkable against a degreewise GF(p) linear-algebra oracle.
"""

__version__ = "0.1.0"
