"""Portable any-map (netpbm) image I/O.

Reads PBM (P1 ascii, P4 binary) bit-exactly and PGM (P2 ascii, P5
binary) by thresholding: a gray sample is foreground when
``2 * value > maxval``.  Writes PBM only, P4 by default.

Foreground convention: PBM bit 1 (a black pixel) maps to foreground
True.  Morphology treats the foreground as the object set, so feeding
images with the opposite convention silently swaps erosion and
dilation; invert first if white is your object.

Parse failures raise distinct exceptions, each carrying the byte
offset where parsing stopped: ``PnmBadMagic``, ``PnmDimensionError``
(non-positive or implausibly large sizes), ``PnmTruncated`` (payload
ends early).  Other malformed content raises the ``PnmParseError``
base.  Writes go to a temporary file first and are renamed into place,
so a failed write never leaves a partial image behind.
"""

import os
import tempfile

import numpy as np

from .grid import BinaryImage, check_image

MAX_SIDE = 1 << 16
MAX_PIXELS = 1 << 26


class PnmParseError(ValueError):
    """Malformed netpbm input; ``offset`` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class PnmBadMagic(PnmParseError):
    pass


class PnmDimensionError(PnmParseError):
    pass


class PnmTruncated(PnmParseError):
    pass


_WHITESPACE = b" \t\r\n\v\f"


class _Scanner:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def skip_space_and_comments(self) -> None:
        data = self.data
        while self.pos < len(data):
            c = data[self.pos : self.pos + 1]
            if c in (b"#",):
                nl = data.find(b"\n", self.pos)
                self.pos = len(data) if nl < 0 else nl + 1
            elif c in _WHITESPACE:
                self.pos += 1
            else:
                return

    def read_uint(self, what: str) -> int:
        self.skip_space_and_comments()
        start = self.pos
        data = self.data
        while self.pos < len(data) and data[self.pos : self.pos + 1].isdigit():
            self.pos += 1
        if self.pos == start:
            if start >= len(data):
                raise PnmTruncated(f"file ends before {what}", start)
            raise PnmParseError(f"expected {what}", start)
        return int(data[start : self.pos])

    def require_single_space(self) -> None:
        if self.pos >= len(self.data):
            raise PnmTruncated("file ends before raster", self.pos)
        if self.data[self.pos : self.pos + 1] not in _WHITESPACE:
            raise PnmParseError("expected whitespace before raster", self.pos)
        self.pos += 1


def _read_dimensions(sc: _Scanner) -> tuple[int, int]:
    width = sc.read_uint("width")
    w_at = sc.pos
    height = sc.read_uint("height")
    h_at = sc.pos
    if width == 0 or width > MAX_SIDE:
        raise PnmDimensionError(f"width {width} out of range", w_at)
    if height == 0 or height > MAX_SIDE:
        raise PnmDimensionError(f"height {height} out of range", h_at)
    if width * height > MAX_PIXELS:
        raise PnmDimensionError(f"{width}x{height} exceeds {MAX_PIXELS} pixels", h_at)
    return width, height


def _parse_bit_raster_ascii(sc: _Scanner, width: int, height: int) -> BinaryImage:
    out = np.empty(width * height, dtype=np.bool_)
    data = sc.data
    for i in range(out.size):
        sc.skip_space_and_comments()
        if sc.pos >= len(data):
            raise PnmTruncated(f"raster ends after {i} of {out.size} pixels", sc.pos)
        c = data[sc.pos]
        if c == 0x30:
            out[i] = False
        elif c == 0x31:
            out[i] = True
        else:
            raise PnmParseError(f"invalid bitmap character {chr(c)!r}", sc.pos)
        sc.pos += 1
    return out.reshape(height, width)


def _parse_bit_raster_packed(sc: _Scanner, width: int, height: int) -> BinaryImage:
    sc.require_single_space()
    row_bytes = (width + 7) // 8
    need = row_bytes * height
    raw = sc.data[sc.pos : sc.pos + need]
    if len(raw) < need:
        raise PnmTruncated(
            f"raster holds {len(raw)} of {need} bytes", sc.pos + len(raw)
        )
    sc.pos += need
    rows = np.frombuffer(raw, dtype=np.uint8).reshape(height, row_bytes)
    bits = np.unpackbits(rows, axis=1)[:, :width]
    return bits.astype(np.bool_)


def _parse_gray_raster_ascii(sc: _Scanner, width, height, maxval) -> BinaryImage:
    out = np.empty(width * height, dtype=np.bool_)
    for i in range(out.size):
        try:
            value = sc.read_uint("gray sample")
        except PnmTruncated:
            raise PnmTruncated(
                f"raster ends after {i} of {out.size} samples", sc.pos
            ) from None
        if value > maxval:
            raise PnmParseError(f"sample {value} exceeds maxval {maxval}", sc.pos)
        out[i] = 2 * value > maxval
    return out.reshape(height, width)


def _parse_gray_raster_binary(sc: _Scanner, width, height, maxval) -> BinaryImage:
    sc.require_single_space()
    sample_bytes = 1 if maxval < 256 else 2
    need = width * height * sample_bytes
    raw = sc.data[sc.pos : sc.pos + need]
    if len(raw) < need:
        raise PnmTruncated(
            f"raster holds {len(raw)} of {need} bytes", sc.pos + len(raw)
        )
    sc.pos += need
    if sample_bytes == 1:
        samples = np.frombuffer(raw, dtype=np.uint8).astype(np.uint32)
    else:
        samples = np.frombuffer(raw, dtype=">u2").astype(np.uint32)
    return (2 * samples > maxval).reshape(height, width)


def parse_image(data: bytes) -> BinaryImage:
    sc = _Scanner(data)
    magic = data[:2]
    if magic not in (b"P1", b"P2", b"P4", b"P5"):
        raise PnmBadMagic(f"unsupported magic {magic!r}", 0)
    sc.pos = 2
    width, height = _read_dimensions(sc)
    if magic == b"P1":
        return _parse_bit_raster_ascii(sc, width, height)
    if magic == b"P4":
        return _parse_bit_raster_packed(sc, width, height)
    maxval = sc.read_uint("maxval")
    if not 0 < maxval < 65536:
        raise PnmParseError(f"maxval {maxval} out of range", sc.pos)
    if magic == b"P2":
        return _parse_gray_raster_ascii(sc, width, height, maxval)
    return _parse_gray_raster_binary(sc, width, height, maxval)


def read_image(path) -> BinaryImage:
    with open(path, "rb") as fh:
        return parse_image(fh.read())


def serialize_image(img: BinaryImage, fmt: str = "P4") -> bytes:
    img = check_image(img)
    height, width = img.shape
    header = f"{fmt}\n{width} {height}\n".encode("ascii")
    if fmt == "P4":
        return header + np.packbits(img, axis=1).tobytes()
    if fmt == "P1":
        digits = np.where(img, "1", "0")
        lines = []
        for row in digits:
            text = "".join(row)
            lines.extend(text[i : i + 70] for i in range(0, len(text), 70))
        return header + ("\n".join(lines) + "\n").encode("ascii")
    raise ValueError(f"unsupported output format {fmt!r} (use 'P1' or 'P4')")


def atomic_write_bytes(path, data: bytes) -> None:
    """Write via a sibling temp file + rename; no partial files on error."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def write_image(img: BinaryImage, path, fmt: str = "P4") -> None:
    atomic_write_bytes(path, serialize_image(img, fmt))
