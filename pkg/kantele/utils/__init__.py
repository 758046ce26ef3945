#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Utility functions (warnings, formatting, packages, pools) used throughout kantele.
"""
