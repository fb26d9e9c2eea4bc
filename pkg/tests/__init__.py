# -*- coding: utf-8 -*-
"""Tests for the Nelson diffusion control module (nelsonctl)."""
