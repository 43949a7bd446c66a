"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class EntryRiskError(Exception):
    """Base class for all package errors."""


class DomainError(EntryRiskError, ValueError):
    """An input lies outside the domain where a computation is defined."""


class ParseError(EntryRiskError, ValueError):
    """Malformed quotation data; carries the 1-based line number."""

    def __init__(self, line: int, reason: str, source: str | None = None):
        self.line = line
        self.reason = reason
        self.source = source
        where = f"{source}:{line}" if source else f"line {line}"
        super().__init__(f"{where}: {reason}")


class DuplicateDateError(ParseError):
    pass


class MissingQuoteError(EntryRiskError, LookupError):
    pass


class CoverageError(EntryRiskError):
    """A trading date is not covered by a macro segment or a schedule."""

    def __init__(self, date, reason: str):
        self.date = date
        super().__init__(f"{date.isoformat()}: {reason}")


class ScheduleGapError(CoverageError):
    pass


class ConfigError(EntryRiskError, ValueError):
    pass


class InsufficientDataError(EntryRiskError, ValueError):
    pass
