#! /usr/bin/env python
# -*- coding: utf-8 -*-
# vim:fenc=utf-8

"""
Binary checkpoint files.

```
magic        8 bytes   b'KNTCKPT1'
header_len   uint32    little-endian
header       JSON      {"config": {...}, "step": int, "dev_loss": float,
                        "optimizer_steps": {name: int}, "tensors": int}
tensors      repeated  uint16 name_len, name (UTF-8), uint8 ndim,
                       uint32 dims[ndim], float32 data (little-endian, C order)
```

Optimizer moments are stored as tensors named `adam.m.<param>` and `adam.v.<param>`.
"""

from __future__ import annotations
import json
import pathlib
import struct
from kantele.utils.typing import Dict, PathLike


def _write_tensor(f, name: str, array) -> None:
    import numpy as np
    encoded = name.encode('utf-8')
    f.write(struct.pack('<H', len(encoded)))
    f.write(encoded)
    f.write(struct.pack('<B', array.ndim))
    f.write(struct.pack(f'<{array.ndim}I', *array.shape))
    f.write(np.ascontiguousarray(array, dtype='<f4').tobytes())


def write(self, path: PathLike) -> pathlib.Path:
    """Write the checkpoint to `path` and return the path."""
    from kantele.config.static import _static_config
    path = pathlib.Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    optimizer = self.optimizer or {}
    tensors = dict(self.params)
    for moment in ('m', 'v'):
        for name, array in optimizer.get(moment, {}).items():
            tensors[f'adam.{moment}.{name}'] = array
    header = json.dumps({
        'config': self.config.to_dict(),
        'step': int(self.step),
        'dev_loss': float(self.dev_loss),
        'optimizer_steps': {k: int(v) for k, v in optimizer.get('t', {}).items()},
        'tensors': len(tensors),
    }).encode('utf-8')

    tmp_path = path.with_suffix(path.suffix + '.tmp')
    with open(tmp_path, 'wb') as f:
        f.write(_static_config()['checkpoint']['magic'])
        f.write(struct.pack('<I', len(header)))
        f.write(header)
        for name, array in tensors.items():
            _write_tensor(f, name, array)
    tmp_path.replace(path)
    return path


def read_checkpoint(path: PathLike, dtype: str = 'float64') -> 'EncoderCheckpoint':
    """
    Read a checkpoint written by `EncoderCheckpoint.write`.

    Raises
    ------
    `ValidationError` if the magic bytes or the layout do not match.
    """
    import numpy as np
    from kantele.core.Encoder import EncoderCheckpoint, EncoderConfig
    from kantele.config.static import _static_config
    from kantele.utils.exceptions import ValidationError
    path = pathlib.Path(path)
    data = path.read_bytes()
    magic = _static_config()['checkpoint']['magic']
    if data[:len(magic)] != magic:
        raise ValidationError(f"'{path}' is not a checkpoint file.")

    try:
        pos = len(magic)
        (header_len,) = struct.unpack_from('<I', data, pos)
        pos += 4
        header = json.loads(data[pos:pos + header_len].decode('utf-8'))
        pos += header_len
        tensors: Dict[str, 'np.ndarray'] = {}
        for _ in range(header['tensors']):
            (name_len,) = struct.unpack_from('<H', data, pos)
            pos += 2
            name = data[pos:pos + name_len].decode('utf-8')
            pos += name_len
            (ndim,) = struct.unpack_from('<B', data, pos)
            pos += 1
            shape = struct.unpack_from(f'<{ndim}I', data, pos)
            pos += 4 * ndim
            count = int(np.prod(shape)) if ndim else 1
            array = np.frombuffer(data, dtype='<f4', count=count, offset=pos).reshape(shape)
            pos += 4 * count
            tensors[name] = array.astype(dtype)
    except (struct.error, ValueError, KeyError) as e:
        raise ValidationError(f"Corrupt checkpoint '{path}': {e}")
    if pos != len(data):
        raise ValidationError(f"Checkpoint '{path}' has {len(data) - pos} trailing bytes.")

    params = {k: v for k, v in tensors.items() if not k.startswith('adam.')}
    optimizer = None
    if header.get('optimizer_steps'):
        optimizer = {
            'm': {k[len('adam.m.'):]: v for k, v in tensors.items() if k.startswith('adam.m.')},
            'v': {k[len('adam.v.'):]: v for k, v in tensors.items() if k.startswith('adam.v.')},
            't': header['optimizer_steps'],
        }
    return EncoderCheckpoint(
        config = EncoderConfig(**header['config']),
        params = params,
        step = header['step'],
        dev_loss = header['dev_loss'],
        optimizer = optimizer,
    )
