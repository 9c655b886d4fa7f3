"""
Error hierarchy shared by services and commands.

Every error carries the process exit code the CLI reports for it.
"""


class BasisForgeError(Exception):
    exit_code: int = 1


class InvalidTargetError(BasisForgeError):
    """Target, set or basis file rejected"""
    exit_code = 2


class TargetExhaustedError(BasisForgeError):
    """The target admits fewer sequence terms than requested"""
    exit_code = 2


class WindowExhaustedError(BasisForgeError):
    """Fewer than two admissible candidates inside the search window"""
    exit_code = 3

    def __init__(self, message: str, census: dict | None = None):
        super().__init__(message)
        self.census = census or {}


class AuditFailureError(BasisForgeError):
    """An audit or verification report did not pass"""
    exit_code = 4

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
