"""Positions, moves and plays."""

from .position import *  # noqa: F401,F403
from .moves import *  # noqa: F401,F403
from .plays import *  # noqa: F401,F403
from .generate import *  # noqa: F401,F403
from .export import *  # noqa: F401,F403
from .canon import BACKEND  # noqa: F401
