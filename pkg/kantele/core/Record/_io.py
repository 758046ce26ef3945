#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
The append-only records file.

The first line is `# schema: <hash>` of the column names; the second is the
tab-separated header. Appending to a file with a different schema raises
`SchemaDriftError`.
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import Iterable, List, Set, Tuple, Any, PathLike


def schema_hash() -> str:
    from kantele.config.static import _static_config
    from kantele.utils.misc import stable_hash
    return stable_hash(*_static_config()['records']['columns'])


def _check_schema(path: pathlib.Path) -> None:
    from kantele.config.static import _static_config
    from kantele.utils.exceptions import SchemaDriftError
    prefix = _static_config()['records']['hash_prefix']
    with open(path, 'r', encoding='utf-8') as f:
        first = f.readline().rstrip('\n')
    if not first.startswith(prefix):
        raise SchemaDriftError(f"'{path}' has no schema line.")
    found = first[len(prefix):]
    if found != schema_hash():
        raise SchemaDriftError(
            f"'{path}' was written with schema {found}, expected {schema_hash()}."
        )


def append_records(path: PathLike, records: Iterable['ResultRecord']) -> int:
    """Append `records` to the file at `path`, creating it if needed. Returns the count written."""
    from kantele.config.static import _static_config
    scf = _static_config()['records']
    columns = scf['columns']
    path = pathlib.Path(path)
    records = list(records)
    if path.exists() and path.stat().st_size > 0:
        _check_schema(path)
        prefix_lines = []
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        prefix_lines = [scf['hash_prefix'] + schema_hash(), '\t'.join(columns)]

    with open(path, 'a', encoding='utf-8', newline='\n') as f:
        for line in prefix_lines:
            f.write(line + '\n')
        for record in records:
            d = record.to_dict()
            f.write('\t'.join(
                ('{:.17g}'.format(d[c]) if isinstance(d[c], float) else str(d[c])) for c in columns
            ) + '\n')
    return len(records)


def read_records(path: PathLike) -> List['ResultRecord']:
    """Read every record from `path`."""
    import pandas as pd
    from kantele.core.Record import ResultRecord
    from kantele.utils.exceptions import CorpusReadError, ValidationError
    path = pathlib.Path(path)
    if not path.exists():
        raise CorpusReadError(path, 'no such file')
    _check_schema(path)
    frame = pd.read_csv(
        path, sep='\t', skiprows=1, dtype=str, keep_default_na=False, na_filter=False,
    )
    try:
        return [ResultRecord.from_dict(row) for row in frame.to_dict(orient='records')]
    except (KeyError, ValueError, TypeError) as e:
        raise ValidationError(f"Malformed record in '{path}': {e}")


def records_to_frame(records: Iterable['ResultRecord']) -> 'pd.DataFrame':
    import pandas as pd
    from kantele.config.static import _static_config
    columns = list(_static_config()['records']['columns'])
    return pd.DataFrame([r.to_dict() for r in records], columns=columns)


def completed_keys(path: PathLike) -> Set[Tuple[Any, ...]]:
    """Cell keys already present in the records file (empty if it does not exist)."""
    path = pathlib.Path(path)
    if not path.exists():
        return set()
    return {r.cell_key for r in read_records(path)}
