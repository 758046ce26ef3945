#! /usr/bin/env python3
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

debug: bool = False
