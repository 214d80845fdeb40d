"""Exception types shared across the pipeline.

Plain ``ValueError`` is raised for precondition/domain violations (bad
radius, bad config values, ...). The classes below mark runtime conditions
the CLI maps to distinct exit codes: parse failures exit 1, pipeline
failures (too few points, no match) exit 2.
"""


class ParseError(ValueError):
    """Malformed serialized input (pattern file, config, scenario)."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        loc = ""
        if path is not None:
            loc = f"{path}:"
        if line is not None:
            loc += f"{line}:"
        super().__init__(f"{loc} {message}" if loc else message)
        self.path = path
        self.line = line


class PipelineError(Exception):
    """Base for per-frame pipeline failures (recoverable, exit code 2)."""


class InsufficientPointsError(PipelineError):
    """Fewer detected points than an operation needs."""


class NoMatchError(PipelineError):
    """No observed window hit the lookup table under any rotation."""


class DegenerateHueError(PipelineError):
    """Hue distribution has no spread; two-class split impossible."""


class PatternSearchError(Exception):
    """Pattern search exhausted its restart budget (unsatisfiable-or-budget)."""

    def __init__(self, message: str, attempts: int):
        super().__init__(f"{message} (attempts: {attempts})")
        self.attempts = attempts


class SequencingError(Exception):
    """Tracker fed frames with non-increasing frame indices."""
