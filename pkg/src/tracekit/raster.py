"""Grayscale raster images: PGM/PNG input, inversion, thresholding, resizing.

Intensity convention throughout the package: 0 = black, 255 = white.
Binary PGM (P5, maxval 255) is the canonical interchange format; PNG is a
read convenience.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"

# BT.601 luminance weights.
_LUMA_R = 0.299
_LUMA_G = 0.587
_LUMA_B = 0.114


@dataclass(eq=False)
class GrayImage:
    """8-bit grayscale raster, row-major, shape (height, width)."""

    pixels: np.ndarray

    def __post_init__(self):
        self.pixels = np.asarray(self.pixels)
        if self.pixels.ndim != 2:
            raise ValueError(f"expected 2-D pixel array, got shape {self.pixels.shape}")
        if self.pixels.size == 0:
            raise ValueError("image must have positive width and height")
        if self.pixels.dtype != np.uint8:
            raise ValueError(f"expected uint8 pixels, got {self.pixels.dtype}")

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @classmethod
    def constant(cls, width: int, height: int, value: int) -> "GrayImage":
        return cls(np.full((height, width), value, dtype=np.uint8))

    def copy(self) -> "GrayImage":
        return GrayImage(self.pixels.copy())


@dataclass(eq=False)
class Bitmap:
    """1-bit raster; True = black/foreground."""

    bits: np.ndarray

    def __post_init__(self):
        self.bits = np.asarray(self.bits)
        if self.bits.ndim != 2:
            raise ValueError(f"expected 2-D bit array, got shape {self.bits.shape}")
        if self.bits.size == 0:
            raise ValueError("bitmap must have positive width and height")
        if self.bits.dtype != np.bool_:
            raise ValueError(f"expected bool bits, got {self.bits.dtype}")

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]


def round_u8(values: np.ndarray) -> np.ndarray:
    """Round float intensities half-up and clamp to [0, 255]."""
    return np.clip(np.floor(values + 0.5), 0, 255).astype(np.uint8)


def to_grayscale(r: np.ndarray, g: np.ndarray, b: np.ndarray) -> GrayImage:
    """Combine 8-bit channel planes into BT.601 luminance."""
    r = np.asarray(r, dtype=np.float64)
    g = np.asarray(g, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if not (r.shape == g.shape == b.shape):
        raise ValueError(f"channel size mismatch: {r.shape}, {g.shape}, {b.shape}")
    return GrayImage(round_u8(_LUMA_R * r + _LUMA_G * g + _LUMA_B * b))


def invert(img: GrayImage) -> GrayImage:
    return GrayImage(255 - img.pixels)


def threshold(img: GrayImage, t: int = 128) -> Bitmap:
    """Binarize: black (True) where pixel < t."""
    return Bitmap(img.pixels < t)


def _parse_pgm(data: bytes, path) -> GrayImage:
    # Header tokens may be separated by arbitrary whitespace and '#' comments.
    pos = 0
    tokens = []
    while len(tokens) < 4:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos] != 0x0A:
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if pos == start:
            raise ValueError(f"{path}: malformed header")
        tokens.append(data[start:pos])
    if tokens[0] != b"P5":
        raise ValueError(f"{path}: malformed header (not a binary PGM)")
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise ValueError(f"{path}: malformed header") from None
    if width <= 0 or height <= 0:
        raise ValueError(f"{path}: malformed header (bad dimensions)")
    if maxval != 255:
        raise ValueError(f"{path}: unsupported maxval {maxval} (expected 255)")
    pos += 1  # single whitespace byte after maxval
    payload = data[pos : pos + width * height]
    if len(payload) != width * height:
        raise ValueError(f"{path}: malformed payload (expected {width * height} bytes)")
    return GrayImage(np.frombuffer(payload, dtype=np.uint8).reshape(height, width).copy())


def _load_png(path) -> GrayImage:
    from PIL import Image

    with Image.open(path) as im:
        if im.mode == "L":
            return GrayImage(np.asarray(im, dtype=np.uint8).copy())
        rgb = np.asarray(im.convert("RGB"), dtype=np.uint8)
    return to_grayscale(rgb[:, :, 0], rgb[:, :, 1], rgb[:, :, 2])


def load_image(path) -> GrayImage:
    """Load a binary PGM (P5, maxval 255) or PNG image as grayscale."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such image file: {path}")
    with open(path, "rb") as f:
        head = f.read(len(_PNG_MAGIC))
    if head == _PNG_MAGIC:
        return _load_png(path)
    return _parse_pgm(path.read_bytes(), path)


def save_pgm(img: GrayImage, path) -> None:
    """Write a binary PGM (P5); load_image round-trips it bit-exactly."""
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    with open(path, "wb") as f:
        f.write(header)
        f.write(img.pixels.tobytes())


def _resize_bilinear(pixels: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    in_h, in_w = pixels.shape
    src = pixels.astype(np.float64)

    def axis_coords(n_out, n_in):
        # Half-pixel centers, clamped to the valid sample range.
        c = (np.arange(n_out) + 0.5) * (n_in / n_out) - 0.5
        c = np.clip(c, 0.0, n_in - 1.0)
        lo = np.floor(c).astype(np.int64)
        hi = np.minimum(lo + 1, n_in - 1)
        return lo, hi, c - lo

    y0, y1, wy = axis_coords(out_h, in_h)
    x0, x1, wx = axis_coords(out_w, in_w)
    wy = wy[:, None]
    wx = wx[None, :]
    top = src[y0][:, x0] * (1 - wx) + src[y0][:, x1] * wx
    bot = src[y1][:, x0] * (1 - wx) + src[y1][:, x1] * wx
    return top * (1 - wy) + bot * wy


def prepare(img: GrayImage, side: int = 256) -> GrayImage:
    """Center-crop to a square, then bilinear-resize to side x side."""
    if side <= 0:
        raise ValueError(f"side must be positive, got {side}")
    s = min(img.width, img.height)
    top = (img.height - s) // 2
    left = (img.width - s) // 2
    cropped = img.pixels[top : top + s, left : left + s]
    if s == side:
        return GrayImage(cropped.copy())
    return GrayImage(round_u8(_resize_bilinear(cropped, side, side)))
