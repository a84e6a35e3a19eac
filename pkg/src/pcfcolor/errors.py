"""Exception hierarchy shared by every module of the package."""


class PCFError(Exception):
    """Base class for all domain errors raised by pcfcolor."""


class GraphParseError(PCFError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidityError(PCFError):
    """Input violates simplicity, symmetry or another structural invariant."""


class NonPlanarEmbeddingError(GraphValidityError):
    """A rotation system whose face count fails Euler's formula."""


class IncompleteColoringError(PCFError):
    pass


class TooLargeError(PCFError):
    """Exhaustive search refused because the input exceeds the size guard."""


class NotAForestError(PCFError):
    pass


class BrooksPreconditionError(PCFError):
    def __init__(self, message, component=None):
        self.component = component
        super().__init__(message)


class ExtensionFailed(PCFError):
    """A reduction's extension step found no admissible color.

    ``step`` names the procedure step, ``vertex`` the vertex being colored.
    """

    def __init__(self, step, vertex=None, detail=""):
        self.step = step
        self.vertex = vertex
        msg = f"extension failed at step {step!r}"
        if vertex is not None:
            msg += f" (vertex {vertex})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class StuckError(PCFError):
    """No reducible configuration and no terminal case applies.

    ``residual`` is the graph the colorer could not make progress on.
    """

    def __init__(self, message, residual=None):
        self.residual = residual
        super().__init__(message)


class HypothesisError(PCFError):
    """The input falls outside the coloring guarantee; ``witness`` shows why."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
