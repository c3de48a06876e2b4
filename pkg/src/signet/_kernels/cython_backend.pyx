# Compiled twins of numpy_backend, bit-identical by construction: every
# floating-point accumulation happens in the same order as the numpy code.
import numpy as np

cimport numpy as cnp
from cython cimport floating

cnp.import_array()


def im2col(floating[:, :, :, ::1] x, int k, int stride):
    cdef Py_ssize_t b = x.shape[0], c = x.shape[1], hp = x.shape[2], wp = x.shape[3]
    cdef Py_ssize_t ho = (hp - k) // stride + 1
    cdef Py_ssize_t wo = (wp - k) // stride + 1
    out = np.empty((b * ho * wo, c * k * k), dtype=np.asarray(x).dtype)
    cdef floating[:, ::1] cols = out
    cdef Py_ssize_t bi, ci, i, j, ki, kj, row, col, y0, x0
    for bi in range(b):
        for i in range(ho):
            y0 = i * stride
            for j in range(wo):
                x0 = j * stride
                row = (bi * ho + i) * wo + j
                col = 0
                for ci in range(c):
                    for ki in range(k):
                        for kj in range(k):
                            cols[row, col] = x[bi, ci, y0 + ki, x0 + kj]
                            col += 1
    return out


def col2im(floating[:, ::1] cols, Py_ssize_t b, Py_ssize_t c, Py_ssize_t hp,
           Py_ssize_t wp, int k, int stride):
    cdef Py_ssize_t ho = (hp - k) // stride + 1
    cdef Py_ssize_t wo = (wp - k) // stride + 1
    out = np.zeros((b, c, hp, wp), dtype=np.asarray(cols).dtype)
    cdef floating[:, :, :, ::1] grad = out
    cdef Py_ssize_t bi, ci, i, j, ki, kj, row
    # (ki, kj) stays outermost so per-pixel accumulation order matches the
    # numpy backend exactly.
    for ki in range(k):
        for kj in range(k):
            for bi in range(b):
                for ci in range(c):
                    for i in range(ho):
                        for j in range(wo):
                            row = (bi * ho + i) * wo + j
                            grad[bi, ci, ki + stride * i, kj + stride * j] += \
                                cols[row, (ci * k + ki) * k + kj]
    return out


def maxpool_forward(floating[:, :, :, ::1] x, int size, int stride, int padding):
    cdef Py_ssize_t b = x.shape[0], c = x.shape[1], h = x.shape[2], w = x.shape[3]
    cdef Py_ssize_t hp = h + 2 * padding, wp = w + 2 * padding
    cdef Py_ssize_t ho = (hp - size) // stride + 1
    cdef Py_ssize_t wo = (wp - size) // stride + 1
    dtype = np.asarray(x).dtype
    out_arr = np.empty((b, c, ho, wo), dtype=dtype)
    idx_arr = np.empty((b, c, ho, wo), dtype=np.int64)
    cdef floating[:, :, :, ::1] out = out_arr
    cdef cnp.int64_t[:, :, :, ::1] argmax = idx_arr
    cdef Py_ssize_t bi, ci, i, j, ki, kj, y, xx, besty, bestx
    cdef floating best, v
    cdef bint found
    for bi in range(b):
        for ci in range(c):
            for i in range(ho):
                for j in range(wo):
                    found = False
                    best = 0
                    besty = 0
                    bestx = 0
                    for ki in range(size):
                        y = i * stride + ki - padding
                        if y < 0 or y >= h:
                            continue
                        for kj in range(size):
                            xx = j * stride + kj - padding
                            if xx < 0 or xx >= w:
                                continue
                            v = x[bi, ci, y, xx]
                            if not found or v > best:
                                found = True
                                best = v
                                besty = y
                                bestx = xx
                    out[bi, ci, i, j] = best
                    argmax[bi, ci, i, j] = besty * w + bestx
    return out_arr, idx_arr


def maxpool_backward(floating[:, :, :, ::1] dout, cnp.int64_t[:, :, :, ::1] argmax,
                     Py_ssize_t h, Py_ssize_t w):
    cdef Py_ssize_t b = dout.shape[0], c = dout.shape[1]
    cdef Py_ssize_t ho = dout.shape[2], wo = dout.shape[3]
    out = np.zeros((b, c, h, w), dtype=np.asarray(dout).dtype)
    cdef floating[:, :, :, ::1] grad = out
    cdef Py_ssize_t bi, ci, i, j, flat
    for bi in range(b):
        for ci in range(c):
            for i in range(ho):
                for j in range(wo):
                    flat = argmax[bi, ci, i, j]
                    grad[bi, ci, flat // w, flat % w] += dout[bi, ci, i, j]
    return out
