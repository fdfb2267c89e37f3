"""Exception types shared across the package."""


class ReprotrackError(Exception):
    """Base class for all package-specific errors."""


class NonFiniteState(ReprotrackError):
    """A simulated compartment left [0, 1] by more than the tolerance or became non-finite."""


class DegenerateEquilibrium(ReprotrackError):
    """Equilibrium initial-condition formula is singular (q0 too close to 1)."""


class InvalidState(ReprotrackError):
    """A compartment value is outside [0, 1]."""


class OutOfSupport(ReprotrackError):
    """A contact-rate model was evaluated past the end of its支 supported window."""


class KernelError(ReprotrackError):
    """Invalid kernel hyperparameters or expansion layout."""


class EmptyResiduals(ReprotrackError):
    """Noise-variance estimate requested for an empty residual vector."""


class NoSignal(ReprotrackError):
    """All observations are zero; nothing to fit."""


class OptimizerStalled(ReprotrackError):
    """No optimizer start reached a finite objective."""


class SingularHessian(ReprotrackError):
    """No evidence candidate produced a positive-definite Hessian."""


class InvalidInit(ReprotrackError):
    """MCMC initial point has zero posterior density."""


class DegenerateProposal(ReprotrackError):
    """Proposal covariance has zero trace."""


class TuningFailed(ReprotrackError):
    """Pilot tuning did not reach the target acceptance band."""


class ChainTooShort(ReprotrackError):
    """Not enough retained samples to form a credible band."""


class SchemaMismatch(ReprotrackError):
    """Input CSV does not carry the expected columns."""


class GapInDates(ReprotrackError):
    """Observation dates are not contiguous daily samples."""


class NegativeCount(ReprotrackError):
    """An ICU count is negative."""


class EmptyWindow(ReprotrackError):
    """Date window selects no observations."""


class IoFailure(ReprotrackError):
    """Reading or writing an artifact file failed."""


class ConfigError(ReprotrackError):
    """Run configuration is missing or malformed."""
