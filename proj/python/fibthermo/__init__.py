"""Fibonacci subshift combinatorics, return words, and freezing-transition bounds."""

from fibthermo._core import *  # noqa: F401,F403
from fibthermo._core import __version__  # noqa: F401
