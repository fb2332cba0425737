"""Physical constants, SI units throughout."""

C0 = 299_792_458.0
"""Speed of light in vacuum, m/s."""

HBAR = 1.054_571_817e-34
"""Reduced Planck constant, J s."""

Z0 = 376.7
"""Free-space impedance 1/(c0 eps0), ohm. Kept at the 0.1-ohm rounding the
yield bookkeeping is specified with; the ~8e-5 relative offset from the CODATA
value only touches absolute yields, never ratios."""

TWO_PI = 6.283185307179586
