"""Exception hierarchy shared across the package."""

from __future__ import annotations


class CROrderError(Exception):
    """Base class for all package-specific errors."""


class InvalidInvolution(CROrderError, ValueError):
    """An ambient map failed one of the involution invariants."""


class NotInvolutive(InvalidInvolution):
    """The map composed with itself is not the identity."""


class NotIsometry(InvalidInvolution):
    """The map does not preserve the Euclidean inner product."""


class DoesNotPermuteRoots(InvalidInvolution):
    """The map sends some root outside the root set."""


class InternalInconsistency(CROrderError, RuntimeError):
    """Two routes that must agree disagreed; signals a bug, never user error."""


class ParseError(CROrderError, ValueError):
    """An instance document is malformed; the message names the first error."""
