from ._disclocus import *  # noqa: F401,F403
