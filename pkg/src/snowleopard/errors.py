"""Exception types raised when an operation's domain conditions fail."""


class SnowLeopardError(ValueError):
    """Base class for all domain errors in this package."""


class MalformedPermutation(SnowLeopardError):
    """Input is not a permutation of 1..n (nor a recognized degenerate value)."""


class IllegalAnti(SnowLeopardError):
    """An antipermutation operand whose neighbor fails the absorption rule."""


class NotParityPreserving(SnowLeopardError):
    """Operation requires p(j) and j to have the same parity for every j."""


class LengthMismatch(SnowLeopardError):
    """Operands have incompatible lengths."""


class NotCompleteBaxter(SnowLeopardError):
    """Operation requires a complete Baxter permutation."""


class NotBaxter(SnowLeopardError):
    """Operation requires a reduced Baxter permutation."""


class NotAntiBaxter(SnowLeopardError):
    """Operation requires an anti-Baxter permutation."""


class NotSnowLeopard(SnowLeopardError):
    """Operation requires a snow leopard permutation."""


class NotEvenThread(SnowLeopardError):
    """Operation requires an even thread."""


class NotOddThread(SnowLeopardError):
    """Operation requires an odd thread."""


class NotJanusThread(SnowLeopardError):
    """Operation requires a Janus thread (both an even and an odd thread)."""


class NotInClass(SnowLeopardError):
    """Lattice path is not in the required restricted class."""


class NotPeakless(SnowLeopardError):
    """Motzkin path has a peak (an adjacent up-down pair)."""


class OrderTooLarge(SnowLeopardError):
    """Aztec diamond order exceeds the exhaustive-enumeration guard."""


class NotPermutationLASM(SnowLeopardError):
    """Tiling's large alternating-sign matrix is not a permutation matrix."""
