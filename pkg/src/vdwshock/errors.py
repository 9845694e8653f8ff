"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the physical/mathematical domain of a formula."""


class AdmissibilityError(DomainError):
    """A density ratio violates the compressive-shock admissibility bounds."""


class DetachmentError(DomainError):
    """No regular reflection exists for the given incidence angle (F < 0)."""


class SingularityError(DomainError):
    """Evaluation requested at a point where the formula is singular."""


class RegionError(DomainError):
    """A point does not belong to the region a field formula covers."""


class ClassificationError(DomainError):
    """A front quantity was requested on the wrong side of the sonic ray."""


class InternalInconsistencyError(RuntimeError):
    """Two formulas that must agree disagreed beyond tolerance."""
