"""
Descriptive exception classes for sampledeval.
The exit code is what the command line returns when the error reaches it.
"""


class EvaluationError(Exception):
    exit_code = 1

    def __init__(self, message, exit_code=None, payload=None):
        Exception.__init__(self, message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.payload = payload

    def to_dict(self):
        rv = dict(self.payload or ())
        rv["status"] = "error"
        rv["error"] = self.message
        return rv


class ValidationError(EvaluationError, ValueError):
    """
    Bad input: ranks, metric specs, sampling schemes, input files.
    """


class ReproductionMismatch(EvaluationError):
    """
    Computed reference table differs from the published values.
    """

    exit_code = 2
