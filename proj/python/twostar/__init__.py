"""Two-star exponential random graph model.

Auxiliary-variable Gibbs sampler, Glauber baseline, phase-diagram
classification, and an exact brute-force oracle for small n. The heavy
lifting lives in the compiled extension; this package re-exports it.
"""

from twostar._core import *  # noqa: F401,F403
from twostar._core import __version__  # noqa: F401
