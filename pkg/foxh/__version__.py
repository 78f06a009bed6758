__all__ = (
    "__title__",
    "__description__",
    "__url__",
    "__version__",
    "__author__",
    "__license__",
    "__copyright__",
)

__title__ = "foxh"
__description__ = "Fox H-function evaluator and identity verification harness"
__url__ = ""
__version__ = "0.1.0"
__author__ = "foxh contributors"
__license__ = "MIT"
__copyright__ = "Copyright 2026 foxh contributors"
