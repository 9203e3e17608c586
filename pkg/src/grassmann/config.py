"""Size caps.  Elements live in a 2^n-dimensional module, so every dense
routine is gated on n."""

# Hard cap on the number of generators (element dimension 2^16 = 65536).
MAX_GENERATORS = 16

# Dense 2^n x 2^n operator matrices (Jordan predicates, generator recovery).
MAX_OPERATOR_MATRIX_N = 10

# Automorphism inversion via full matrix inversion.
MAX_INVERT_N = 12
