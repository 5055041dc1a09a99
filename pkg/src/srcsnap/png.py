"""Minimal deterministic PNG codec for 8-bit grayscale images.

Writing goes through fixed encoder parameters (no interlacing, filter 0 on
every scanline, one IDAT chunk, one zlib level), so identical pixels always
produce identical bytes. Reading handles any 8-bit grayscale PNG with the
five standard scanline filters, which covers round-tripping our own output.
"""

from __future__ import annotations

import struct
import zlib

import numpy as np

from .image import SnapshotImage

_SIGNATURE = b"\x89PNG\r\n\x1a\n"
_ZLIB_LEVEL = 6


def _chunk(kind: bytes, data: bytes) -> bytes:
    crc = zlib.crc32(kind)
    crc = zlib.crc32(data, crc)
    return struct.pack(">I", len(data)) + kind + data + struct.pack(">I", crc)


def encode_png(img: SnapshotImage) -> bytes:
    """Encode as an 8-bit grayscale PNG, byte-deterministically."""
    height, width = img.pixels.shape
    raw = bytearray()
    for row in img.pixels:
        raw.append(0)  # filter type: None
        raw += row.tobytes()
    header = struct.pack(">IIBBBBB", width, height, 8, 0, 0, 0, 0)
    return b"".join(
        (
            _SIGNATURE,
            _chunk(b"IHDR", header),
            _chunk(b"IDAT", zlib.compress(bytes(raw), _ZLIB_LEVEL)),
            _chunk(b"IEND", b""),
        )
    )


def _paeth(a: int, b: int, c: int) -> int:
    p = a + b - c
    pa = abs(p - a)
    pb = abs(p - b)
    pc = abs(p - c)
    if pa <= pb and pa <= pc:
        return a
    if pb <= pc:
        return b
    return c


def decode_png(data: bytes) -> SnapshotImage:
    """Decode an 8-bit grayscale PNG produced by encode_png (or compatible)."""
    if data[:8] != _SIGNATURE:
        raise ValueError("not a PNG file")
    pos = 8
    width = height = None
    idat = bytearray()
    while pos < len(data):
        (length,) = struct.unpack(">I", data[pos : pos + 4])
        kind = data[pos + 4 : pos + 8]
        body = data[pos + 8 : pos + 8 + length]
        pos += 12 + length
        if kind == b"IHDR":
            width, height, depth, color, _, _, interlace = struct.unpack(
                ">IIBBBBB", body
            )
            if depth != 8 or color != 0 or interlace != 0:
                raise ValueError("only non-interlaced 8-bit grayscale is supported")
        elif kind == b"IDAT":
            idat += body
        elif kind == b"IEND":
            break
    if width is None or height is None:
        raise ValueError("missing IHDR chunk")
    raw = zlib.decompress(bytes(idat))
    stride = width + 1
    if len(raw) != stride * height:
        raise ValueError("corrupt pixel data")
    out = np.empty((height, width), dtype=np.uint8)
    prev = np.zeros(width, dtype=np.uint8)
    for y in range(height):
        line = raw[y * stride : (y + 1) * stride]
        filt = line[0]
        cur = np.frombuffer(line[1:], dtype=np.uint8).copy()
        if filt == 0:
            pass
        elif filt == 2:  # Up
            cur += prev
        elif filt in (1, 3, 4):
            left = 0
            for x in range(width):
                if filt == 1:  # Sub
                    cur[x] = (int(cur[x]) + left) & 0xFF
                elif filt == 3:  # Average
                    cur[x] = (int(cur[x]) + (left + int(prev[x])) // 2) & 0xFF
                else:  # Paeth
                    up_left = int(prev[x - 1]) if x else 0
                    cur[x] = (
                        int(cur[x]) + _paeth(left, int(prev[x]), up_left)
                    ) & 0xFF
                left = int(cur[x])
        else:
            raise ValueError(f"unknown filter type {filt}")
        out[y] = cur
        prev = out[y]
    return SnapshotImage(out)
