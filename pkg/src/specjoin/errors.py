"""Exception types shared across the package."""


class SpecjoinError(Exception):
    """Base class for all domain errors."""


class IsolatedVertexError(SpecjoinError):
    """A vertex (or block) of degree zero where the normalized Laplacian is undefined."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has degree 0; normalized Laplacian undefined")


class NoConvergenceError(SpecjoinError):
    """The Jacobi eigensolver hit its sweep cap before reaching the off-diagonal target."""


class TotalMismatchError(SpecjoinError):
    """Two spectra with different total multiplicity cannot be compared elementwise."""


class NonRegularComponentError(SpecjoinError):
    """The structural route requires every component graph to be regular."""


class OracleSizeError(SpecjoinError):
    """Graph order exceeds the dense-oracle cutoff (see SPECJOIN_ORACLE_MAX)."""
