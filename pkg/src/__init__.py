# -*- coding: utf-8 -*-
"""
Monodromy Lab source package.
"""
