"""Central tolerance configuration.

Every numerical check in the package pulls its threshold from one shared
record so tests and library code cannot drift apart.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    #: algebraic identities that hold to rounding (CAR, pairing signs)
    exact: float = 1e-12
    #: identity checks on constructed objects (hermiticity, trace, unitarity)
    identity: float = 1e-10
    #: round trips through the Fock oracle
    roundtrip: float = 1e-9
    #: purity test ||Gamma^2 - Gamma|| and BLS conjugation residuals
    purity: float = 1e-8
    #: BDF (Q, p) round trips
    bdf_roundtrip: float = 1e-8
    #: eigenvalues of gamma snapped to 0/1 when closer than this
    snap: float = 1e-12
    #: relative tolerance for radial quadrature
    quadrature: float = 1e-8


TOL = Tolerances()
