# -*- coding: utf-8 -*-
"""
Test suite for AI Context Studio.
"""
