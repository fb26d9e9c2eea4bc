# -*- coding: utf-8 -*-
"""Nelson diffusion representations and controlling potentials (nelsonctl)."""

__version__ = '20261019'
