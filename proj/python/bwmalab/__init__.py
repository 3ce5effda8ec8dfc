from ._bwmalab import *  # noqa: F401,F403
