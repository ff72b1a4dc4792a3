class ResourceGuardError(RuntimeError):
    """A configured size limit would be exceeded."""


class PreconditionError(ValueError):
    """An operation was called outside its mathematical hypotheses."""
