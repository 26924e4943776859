"""Noncrossing partitions under rotation and reflection."""

from ._core import *  # noqa: F401,F403
from ._core import SetPartition, __doc__  # noqa: F401
