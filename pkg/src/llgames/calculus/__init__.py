"""Sequent calculi LL, LLT and LLTN: proofs, checking and transformations."""

from .proof import *  # noqa: F401,F403
from .build import *  # noqa: F401,F403
from .transform import *  # noqa: F401,F403
from .anodyne import *  # noqa: F401,F403
from .search import *  # noqa: F401,F403
from .fixtures import *  # noqa: F401,F403
from .generate import *  # noqa: F401,F403
from .serialize import *  # noqa: F401,F403
