#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Read and write subword models as plain text.

```
kantele-subword 1
vocab_size	10
merges	2
marker	▁
normalization	NFC
special	pad	<pad>
...
[vocab]
<pad>
...
[merges]
▁a	b
```
"""

from __future__ import annotations
import pathlib
from kantele.utils.typing import PathLike


def write(self, path: PathLike) -> pathlib.Path:
    """Write the model to `path` and return the path."""
    from kantele.config.static import _static_config
    scf = _static_config()['subword']
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        scf['header'],
        f"vocab_size\t{self.vocab_size}",
        f"merges\t{len(self.merges)}",
        f"marker\t{self.marker}",
        f"normalization\t{self.normalization or 'none'}",
    ]
    lines += [f"special\t{role}\t{self.specials[role]}" for role in scf['specials']]
    lines.append('[vocab]')
    lines += self.vocab
    lines.append('[merges]')
    lines += [f"{a}\t{b}" for a, b in self.merges]
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write('\n'.join(lines) + '\n')
    return path


def read(path: PathLike) -> 'kantele.core.SubwordModel.SubwordModel':
    """
    Read a model written by `SubwordModel.write`.

    Raises
    ------
    `ValidationError` if the file is malformed or its counts disagree with its header.
    """
    from kantele.core.SubwordModel import SubwordModel
    from kantele.config.static import _static_config
    from kantele.utils.exceptions import ValidationError
    path = pathlib.Path(path)
    with open(path, 'r', encoding='utf-8', newline='\n') as f:
        lines = f.read().split('\n')
    if lines and lines[-1] == '':
        lines = lines[:-1]

    if not lines or lines[0] != _static_config()['subword']['header']:
        raise ValidationError(f"'{path}' is not a subword model file.")

    header, specials, i = {}, {}, 1
    try:
        while lines[i] != '[vocab]':
            parts = lines[i].split('\t')
            if parts[0] == 'special':
                specials[parts[1]] = parts[2]
            else:
                header[parts[0]] = parts[1]
            i += 1
        vocab_size, num_merges = int(header['vocab_size']), int(header['merges'])
        vocab = lines[i + 1:i + 1 + vocab_size]
        j = i + 1 + vocab_size
        if lines[j] != '[merges]':
            raise ValidationError(f"Expected '[merges]' on line {j + 1} of '{path}'.")
        merges = [tuple(m.split('\t')) for m in lines[j + 1:j + 1 + num_merges]]
    except (IndexError, KeyError, ValueError) as e:
        if isinstance(e, ValidationError):
            raise
        raise ValidationError(f"Malformed subword model file '{path}': {e}")

    if len(vocab) != vocab_size or len(merges) != num_merges or any(len(m) != 2 for m in merges):
        raise ValidationError(f"Subword model file '{path}' is truncated.")
    normalization = header.get('normalization', 'NFC')
    return SubwordModel(
        vocab, merges, specials=specials, marker=header.get('marker', '▁'),
        normalization=(None if normalization == 'none' else normalization),
    )
