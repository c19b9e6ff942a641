class PointfreeError(ValueError):
    """Base class for every input or precondition failure raised here."""


class NotAPartialOrder(PointfreeError):
    pass


class NotALattice(PointfreeError):
    pass


class NotDistributive(PointfreeError):
    pass


class NotAFrameHom(PointfreeError):
    pass


class NotBoolean(PointfreeError):
    pass


class OracleNotIso(PointfreeError):
    pass


class FrameMismatch(PointfreeError):
    pass


class RelationViolation(PointfreeError):
    """A step-map pair breaks a defining relation it is required to satisfy."""


class NotAnExtendedScale(PointfreeError):
    pass


class MeetNotZero(PointfreeError):
    pass


class NotDiscrete(PointfreeError):
    pass


class NotNonnegative(PointfreeError):
    pass


class PreconditionFailed(PointfreeError):
    pass


class NotHausdorff(PointfreeError):
    pass


class NotNearlyFinite(PointfreeError):
    pass


class EndpointOrder(PointfreeError):
    pass


class NotSemicontinuous(PointfreeError):
    pass


class NotNormalLsc(PointfreeError):
    pass


class NotASpace(PointfreeError):
    pass


class NotPositive(PointfreeError):
    pass


class NotWeakUnit(PointfreeError):
    pass


class GNotPositive(PointfreeError):
    pass


class ParseError(PointfreeError):
    pass


class ConfigError(PointfreeError):
    pass


class SuiteFailure(PointfreeError):
    """A verification run finished with failing checks."""

    def __init__(self, report):
        failed = [r.check_id for r in report.records if not r.passed]
        super().__init__(f"{len(failed)} check(s) failed: {', '.join(failed)}")
        self.report = report
