#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
This package includes argument parsing utilities.
"""

from kantele.actions.arguments._parse_arguments import parse_arguments
from kantele.actions.arguments._parser import parser
