from ._linkage import *  # noqa: F401,F403
from ._linkage import __version__  # noqa: F401
