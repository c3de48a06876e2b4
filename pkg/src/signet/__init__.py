"""signet: offline handwritten signature verification toolkit.

Learns writer-independent features by training a CNN to discriminate
writers on a development population, then trains per-writer SVMs on the
learned embeddings. Includes preprocessing, a deterministic NN engine,
biometric metrics, embedding-space analysis, a synthetic corpus generator,
and a pipeline CLI.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND  # noqa: F401
