"""Strategies, winners and validity harnesses."""

from .solve import *  # noqa: F401,F403
from .oracle import *  # noqa: F401,F403
from .validity import *  # noqa: F401,F403
