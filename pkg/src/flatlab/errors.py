"""Shared exception types."""


class CapacityError(Exception):
    """An operation would exceed its iteration or allocation budget.

    Raised up front, before any partial work is produced; callers can
    retry with a larger explicit budget.
    """
