# -*- coding: utf-8 -*-
"""
Shipped tuples, move sequences and twist words.
"""
