"""Pure-numpy kernels: patch gather/scatter for convolution and max-pooling.

These mirror the compiled kernels in ``cython_backend`` bit for bit: the
accumulation order of every floating-point sum is identical, so a network
trained with either backend produces the same bytes.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def im2col(x, k, stride):
    """Gather k*k patches of x (B,C,Hp,Wp) into rows (B*Ho*Wo, C*k*k).

    Row order is (b, i, j); column order is (c, ki, kj), all row-major.
    """
    b, c, hp, wp = x.shape
    ho = (hp - k) // stride + 1
    wo = (wp - k) // stride + 1
    win = sliding_window_view(x, (k, k), axis=(2, 3))[:, :, ::stride, ::stride]
    cols = win.transpose(0, 2, 3, 1, 4, 5).reshape(b * ho * wo, c * k * k)
    return np.ascontiguousarray(cols)


def col2im(cols, b, c, hp, wp, k, stride):
    """Scatter-add patch rows back onto the padded input frame.

    Inverse (adjoint) of im2col: overlapping patches accumulate. Additions at
    any one pixel happen in (ki, kj) order.
    """
    ho = (hp - k) // stride + 1
    wo = (wp - k) // stride + 1
    grad = np.zeros((b, c, hp, wp), dtype=cols.dtype)
    patches = cols.reshape(b, ho, wo, c, k, k).transpose(0, 3, 1, 2, 4, 5)
    for ki in range(k):
        for kj in range(k):
            grad[:, :, ki:ki + stride * ho:stride, kj:kj + stride * wo:stride] += \
                patches[:, :, :, :, ki, kj]
    return grad


def maxpool_forward(x, size, stride, padding):
    """Max over size*size windows; returns (out, argmax).

    argmax holds flat indices (iy*W + ix) into the unpadded input, first
    occurrence (row-major within the window) on ties. Padding cells are -inf
    and never win; callers must keep padding < size so every window sees at
    least one real pixel.
    """
    b, c, h, w = x.shape
    if padding:
        xp = np.full((b, c, h + 2 * padding, w + 2 * padding), -np.inf, dtype=x.dtype)
        xp[:, :, padding:padding + h, padding:padding + w] = x
    else:
        xp = x
    hp, wp = xp.shape[2:]
    ho = (hp - size) // stride + 1
    wo = (wp - size) // stride + 1
    win = sliding_window_view(xp, (size, size), axis=(2, 3))[:, :, ::stride, ::stride]
    flat = win.reshape(b, c, ho, wo, size * size)
    local = flat.argmax(axis=-1)
    out = np.take_along_axis(flat, local[..., None], axis=-1)[..., 0]
    iy = (np.arange(ho) * stride)[None, None, :, None] + local // size - padding
    ix = (np.arange(wo) * stride)[None, None, None, :] + local % size - padding
    return np.ascontiguousarray(out), (iy * w + ix).astype(np.int64)


def maxpool_backward(dout, argmax, h, w):
    """Route each window's gradient to its argmax pixel (scatter-add)."""
    b, c, ho, wo = dout.shape
    grad = np.zeros((b, c, h * w), dtype=dout.dtype)
    bi = np.arange(b)[:, None, None]
    ci = np.arange(c)[None, :, None]
    np.add.at(grad, (bi, ci, argmax.reshape(b, c, -1)), dout.reshape(b, c, -1))
    return grad.reshape(b, c, h, w)
