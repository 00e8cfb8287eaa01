"""Image tracing toolkit: filters, autoencoding, vectorization, evaluation."""

__version__ = "0.1.0"

from .raster import Bitmap, GrayImage, invert, load_image, prepare, save_pgm, threshold, to_grayscale

__all__ = [
    "Bitmap",
    "GrayImage",
    "invert",
    "load_image",
    "prepare",
    "save_pgm",
    "threshold",
    "to_grayscale",
    "__version__",
]
