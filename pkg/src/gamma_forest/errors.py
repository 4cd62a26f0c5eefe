"""Errors shared by the enumeration modules."""


class LimitExceededError(ValueError):
    """Raised when a requested enumeration size is above the configured cap.

    Every enumerator takes the cap as an argument with a conservative
    default, so callers that really want a larger run can opt in explicitly.
    """

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds the cap {cap}; pass a larger cap to opt in")
        self.what = what
        self.n = n
        self.cap = cap
