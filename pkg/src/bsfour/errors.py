"""Exceptions shared across the package.

The CLI maps these onto exit codes: SchemaError and its friends exit 2,
InconsistentDescriptorError exits 3, usage problems exit 64.
"""


class BsfourError(ValueError):
    """Base class for all package-specific errors."""


class SchemaError(BsfourError):
    """Malformed or invalid serialized input."""


class GroupMismatchError(BsfourError):
    """Operands built over different group parameters k."""


class WordSyntaxError(BsfourError):
    """A word contains letters outside {a, A, b, B}."""


class ChainComplexError(BsfourError):
    """Boundary matrices whose composition is not zero."""


class CertificateError(BsfourError):
    """An inverse or isometry certificate failed exact verification."""


class DescriptorError(BsfourError):
    """A manifold descriptor violates a structural constraint."""


class InconsistentDescriptorError(DescriptorError):
    """A descriptor violates a forced Kirby-Siebenmann relation."""
