"""Identity catalog and suite runner."""

from .catalog import CATALOG, ERRATA
from .runner import (
    IdentityCheck,
    IndexRangeError,
    SuiteConfig,
    UnknownIdentityError,
    all_ids,
    get_entry,
    run_suite,
    summarize,
    verify,
)

__all__ = [
    "CATALOG",
    "ERRATA",
    "IdentityCheck",
    "IndexRangeError",
    "SuiteConfig",
    "UnknownIdentityError",
    "all_ids",
    "get_entry",
    "run_suite",
    "summarize",
    "verify",
]
