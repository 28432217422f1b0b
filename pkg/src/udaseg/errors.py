"""Exception taxonomy shared across the package.

Every error the CLI can surface carries a short machine-parsable category;
the CLI prints it as a single `error category=<cat> ...` line.
"""


class UdasegError(Exception):
    """Base class; `category` feeds the CLI's one-line error output."""

    category = "internal"


class ConfigError(UdasegError):
    """Invalid, contradictory, or unknown configuration."""

    category = "config"


class DataError(UdasegError):
    """Dataset problems: missing files, shape/checksum mismatch, bad payloads."""

    category = "data"


class TrainingError(UdasegError):
    """Training aborted (non-finite loss, incompatible checkpoint)."""

    category = "train"
