"""Exception types shared across the toolkit."""


class SignetError(Exception):
    """Base class for all toolkit errors."""


class ConstantImage(SignetError):
    """Image has a single intensity value; no threshold can split it."""


class EmptyForeground(SignetError):
    """No ink pixels left after thresholding."""


class DoesNotFit(SignetError):
    """Ink bounding box exceeds the target canvas."""


class ColorImageRejected(SignetError):
    """Input file is not 8-bit grayscale."""


class ShapeMismatch(SignetError):
    """Incompatible tensor shapes."""


class BatchTooSmall(SignetError):
    """Batch normalization in train mode needs at least two samples."""


class LabelOutOfRange(SignetError):
    """Class label outside [0, num_classes)."""


class NonFiniteValues(SignetError):
    """NaN or Inf encountered where finite values are required."""


class UnknownFamily(SignetError):
    """Architecture family name not recognized."""


class ShapeUnderflow(SignetError):
    """A spatial dimension would shrink below 1; architecture/input mismatch."""


class NoSuchLayer(SignetError):
    """Named layer not present in the network."""


class InsufficientSamples(SignetError):
    """Not enough samples to honor the requested protocol."""


class DimensionMismatch(SignetError):
    """Feature vector dimensionality differs from training dimensionality."""


class EmptyScores(SignetError):
    """Metric requested on an empty score list."""


class NoConvergence(SignetError):
    """Iterative procedure hit its iteration cap before reaching tolerance."""


class TooFewUsers(SignetError):
    """Dataset has fewer users than the split plan requires."""


class MalformedTree(SignetError):
    """Dataset directory tree does not follow the expected layout."""


class DuplicateUser(SignetError):
    """Two directory entries map to the same user id."""


class StageError(SignetError):
    """Pipeline stage failure, tagged with the stage name."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


class ArtifactMismatch(SignetError):
    """Stage artifact was produced by a different upstream artifact (hash mismatch)."""
