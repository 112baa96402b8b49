"""Rate bounds and small-case oracles for list-decodable insdel codes."""

from ._core import *  # noqa: F401,F403
from ._core import BoundSource, BoundValue, BudgetError, DomainError

__all__ = [name for name in dir() if not name.startswith("_")]
