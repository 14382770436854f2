"""Exception hierarchy shared by the whole package."""


class CurrentKMError(Exception):
    """Base class for every error raised by this package."""


class PolynomialSyntaxError(CurrentKMError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariable(CurrentKMError, ValueError):
    pass


class RingMismatch(CurrentKMError, ValueError):
    pass


class NotCofinite(CurrentKMError):
    """The ideal has a positive-dimensional quotient."""


class NonRationalPoint(CurrentKMError):
    """Some maximal ideal has a residue field strictly larger than Q."""


class NotGCM(CurrentKMError, ValueError):
    pass


class NotSymmetrizable(CurrentKMError, ValueError):
    pass


class NotFiniteType(CurrentKMError, ValueError):
    pass


class NotDominant(CurrentKMError, ValueError):
    pass


class ContextMismatch(CurrentKMError, ValueError):
    pass


class InsufficientDepth(CurrentKMError, ValueError):
    pass


class MissingPsiEntry(CurrentKMError, KeyError):
    def __init__(self, coroot, monomial):
        super().__init__(f"no value for h{coroot + 1} at monomial {monomial}")
        self.coroot = coroot
        self.monomial = monomial

    # KeyError would quote the message
    __str__ = Exception.__str__


class UnknownPsiKey(CurrentKMError, KeyError):
    def __init__(self, key):
        super().__init__(f"psi key {key!r} does not name a coroot and a standard monomial")
        self.key = key

    __str__ = Exception.__str__


class NotIntegrable(CurrentKMError):
    """Base for the certificates that a highest-weight module is not integrable."""

    kind = "NotIntegrable"

    def as_dict(self):
        return {"kind": self.kind}


class RadicalObstruction(NotIntegrable):
    """psi does not vanish on h' tensor sqrt(I)."""

    kind = "RadicalObstruction"

    def __init__(self, coroot, witness):
        super().__init__(f"psi(h{coroot + 1} * ({witness})) != 0 on the radical")
        self.coroot = coroot
        self.witness = witness

    def as_dict(self):
        return {"kind": self.kind, "coroot": self.coroot + 1, "witness": str(self.witness)}


class NonDominantWeight(NotIntegrable):
    kind = "NonDominantWeight"

    def __init__(self, point_index, coroot, value):
        super().__init__(f"weight at point {point_index} has h{coroot + 1}-value {value}")
        self.point_index = point_index
        self.coroot = coroot
        self.value = value

    def as_dict(self):
        return {
            "kind": self.kind,
            "point": self.point_index,
            "coroot": self.coroot + 1,
            "value": str(self.value),
        }


class UnsupportedOracleType(CurrentKMError, ValueError):
    pass
