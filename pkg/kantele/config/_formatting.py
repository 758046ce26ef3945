#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Define default values for the formatting key.
"""

default_unicode, default_ansi = True, True
import platform
if platform.system() == 'Windows':
    default_unicode, default_ansi = False, True

emoji = {
    'error'           : '🛑',
    'failure'         : '💢',
    'success'         : '🎉',
    'warning'         : '🔔',
    'info'            : '💬',
    'debug'           : '🐞',
}

def _kind(unicode_icon: str, ascii_icon: str, style: str) -> dict:
    return {
        'unicode' : {'icon': unicode_icon},
        'ascii'   : {'icon': ascii_icon},
        'ansi'    : {'rich': {'style': style}},
    }

default_formatting_config = {
    'unicode'             : default_unicode,
    'ansi'                : default_ansi,
    'emoji'               : emoji,
    'warnings'            : _kind(emoji['warning'], 'WARNING', 'bold yellow'),
    'success'             : _kind(emoji['success'], '+', 'bold bright_green'),
    'failure'             : _kind(emoji['failure'], '-', 'bold red'),
    'errors'              : _kind(emoji['error'], 'ERROR', 'bold red'),
    'info'                : _kind(emoji['info'], 'INFO', 'bright_magenta'),
    'debug'               : _kind(emoji['debug'], 'DEBUG', 'cyan'),
}
