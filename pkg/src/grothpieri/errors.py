class InvariantError(RuntimeError):
    """An internal invariant was breached (non-exact division, runaway expansion, ...)."""


class ExpansionError(InvariantError):
    pass
