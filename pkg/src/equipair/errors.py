"""Exception hierarchy shared by all modules.

CLI exit codes: InputError -> 1, DegeneracyError / PerturbationError /
UncertifiedSampleError -> 2, theorem-violation / internal-inconsistency
family -> 3.
"""


class EquipairError(Exception):
    """Base class for all library errors."""


class InputError(EquipairError):
    """Malformed input: bad file, bad flag, violated precondition."""


class DegeneracyError(EquipairError):
    """General-position failure discovered before or during construction."""


class PerturbationError(DegeneracyError):
    """Perturbation retries exhausted; pinned values force degeneracy."""


class GenericityError(EquipairError):
    """A sample point landed on a cell boundary; caller should resample."""


class TheoremViolationError(EquipairError):
    """A structure the underlying theorems guarantee failed to appear."""


class PrincipalComponentError(TheoremViolationError):
    """No degree-1 component touching the diagonal exists."""


class TuckerCounterexampleError(TheoremViolationError):
    """Tucker-labeled input with no complementary edge (invalid manifold)."""


class InfeasibilityError(TheoremViolationError):
    """Mountain schedule endpoints in different components.

    For valid inputs this must not occur; seeing it signals an
    implementation bug rather than a property of the input.
    """


class InternalInconsistencyError(EquipairError):
    """A postcondition of an earlier stage failed downstream."""


class UncertifiedSampleError(EquipairError):
    """A witness path sample could not be certified at the given epsilon."""

    def __init__(self, sample_index, best_k, best_dist2):
        self.sample_index = sample_index
        self.best_k = best_k
        self.best_dist2 = best_dist2
        super().__init__(
            f"sample {sample_index} uncertified; best set {best_k} "
            f"at squared distance {best_dist2}"
        )
