from ._bihom import *  # noqa: F401,F403
from ._bihom import __doc__  # noqa: F401
