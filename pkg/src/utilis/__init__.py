"""ReesType utilities package: logging, configuration and errors."""

from src.utilis.errors import DegreeCapExceeded, ParseError, PreconditionError, ReesTypeError
from src.utilis.logger import logger

__all__ = ["logger", "ReesTypeError", "ParseError", "PreconditionError", "DegreeCapExceeded"]
