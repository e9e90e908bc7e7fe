"""gorfro: Koszul homology, Gorenstein and Frobenius verdicts for homogeneous ideals."""

from .errors import GorfroError, InputError, InternalCheckError, ResourceLimitError
from .version import __version__

__all__ = ["GorfroError", "InputError", "InternalCheckError", "ResourceLimitError", "__version__"]
