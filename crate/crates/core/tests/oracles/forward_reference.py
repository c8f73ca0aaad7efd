"""Extended-precision forward transform for the frozen values in forward_frozen.rs.

Inputs are the binary64 values used by the Rust tests, taken exactly.
Run: python3 forward_reference.py
"""
from mpmath import mp, mpf, sqrt, sin, cos, pi, nstr

mp.dps = 50

CASES = [
    # name, (ax, ay, az), phi, lambda, height factor of az
    ("earth_quarter", (6378.173435, 6378.1039, 6356.7544), float(pi / 4), float(pi / 4), 1 / 50),
    ("mimas_mixed", (207.4, 196.8, 190.6), 0.9, -2.3, -1 / 10),
    ("io_low", (1829.4, 1819.3, 1815.7), -1.2, 3.0, 1 / 25),
]


def forward(axes, phi, lam, h):
    ax, ay, az = (mpf(a) for a in axes)
    ee2 = (ax**2 - ay**2) / ax**2
    ex2 = (ax**2 - az**2) / ax**2
    phi, lam, h = mpf(phi), mpf(lam), mpf(h)
    nu = ax / sqrt(1 - ex2 * sin(phi) ** 2 - ee2 * cos(phi) ** 2 * sin(lam) ** 2)
    x = (nu + h) * cos(phi) * cos(lam)
    y = (nu * (1 - ee2) + h) * cos(phi) * sin(lam)
    z = (nu * (1 - ex2) + h) * sin(phi)
    return x, y, z


for name, axes, phi, lam, hf in CASES:
    h = hf * axes[2]
    x, y, z = forward(axes, phi, lam, h)
    print(name, repr(phi), repr(lam), repr(h), nstr(x, 25), nstr(y, 25), nstr(z, 25))
