"""Shared exception types.

InputError marks violations of documented preconditions on user-supplied
data (bad JSON, invalid spec matrices, conductor mismatches); internal
invariant breakage stays on plain ValueError/RuntimeError so the CLI can
map the two onto different exit codes.
"""


class InputError(ValueError):
    """User-supplied data violates a documented precondition or schema."""


class BudgetExceeded(InputError):
    """A computation was refused up front because it exceeds its budget."""

    def __init__(self, message, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget
