#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Thin wrapper around PyYAML so the rest of the package never imports it directly.
"""

from __future__ import annotations
from kantele.utils.typing import Any, Optional
from kantele.utils.packages import attempt_import

_yaml = attempt_import('yaml', warn=False)


class yaml:
    """Namespace of the YAML functions used by the package."""

    @staticmethod
    def safe_load(*args, **kw) -> Any:
        from kantele.utils.misc import filter_keywords
        return _yaml.safe_load(*args, **filter_keywords(_yaml.safe_load, **kw))

    @staticmethod
    def dump(data: Any, stream: Optional[Any] = None, **kw) -> Optional[str]:
        from kantele.utils.misc import filter_keywords
        kw.setdefault('sort_keys', False)
        kw.setdefault('allow_unicode', True)
        return _yaml.safe_dump(data, stream, **filter_keywords(_yaml.safe_dump, **kw))
