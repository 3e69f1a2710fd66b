# Copyright 2026 The hetsim Authors
# SPDX-License-Identifier: Apache-2.0
"""Two-tier macro/femtocell access-game simulator."""

from ._hetsim import *  # noqa: F401,F403
from ._hetsim import __version__  # noqa: F401
