"""Exception types shared across the package."""


class TCRationalError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class AlgebraError(TCRationalError, ValueError):
    pass


class ResourceError(TCRationalError):
    """An operation would exceed a configured size or search cap."""


class InputError(TCRationalError, ValueError):
    """Invalid input data; ``errors`` lists every violation found."""

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))
