"""Construction and audit of integer bases with a prescribed representation function."""

__version__ = "1.0.0"
