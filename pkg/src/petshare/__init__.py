"""Threshold secret sharing over GF(2^m): Shamir, SSMS, and PETS."""

from .cipher import STREAM256, TEST_KEYSTREAM, TOY_OTP, SystemRandomSource
from .errors import (
    IncompatibleShares,
    InsufficientShares,
    PetshareError,
    ReconstructionFailure,
    ShareFormatError,
)
from .gf import GF4, GF256, FieldElement, FieldSpec
from .pets import pets_plan, pets_reconstruct, pets_split
from .poly import SymbolVector, VectorPolynomial
from .schemes import join, split
from .share import Scheme, Share
from .ssms import ssms_reconstruct, ssms_split

__version__ = "0.1.0"
