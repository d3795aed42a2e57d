"""Independent reference computations used by the tests.

Nothing here calls into the code paths being checked: invariants are raw
index sums with explicit Levi-Civita tensors, S_k come from principal minors
or eigenvalues, the Molien series from multiplying geometric series.
"""
import itertools

import numpy as np

EPS = np.zeros((3, 3, 3))
for _p in itertools.permutations(range(3)):
    EPS[_p] = np.linalg.det(np.eye(3)[list(_p)])


def raw_invariants(a, b, c):
    """Index-sum forms; first slot of ``c`` is qubit A, second qubit B."""
    e = EPS

    def ein(subscripts, *ops):
        return float(np.einsum(subscripts, *ops, optimize=True))

    return {
        "c002": ein("ij,ij", c, c),
        "c200": ein("i,i", a, a),
        "c020": ein("i,i", b, b),
        "c003": ein("ijk,xyz,ix,jy,kz", e, e, c, c, c) / 6.0,
        "c111": ein("i,ij,j", a, c, b),
        "c004": ein("ix,iy,jx,jy", c, c, c, c),
        "c202": ein("i,j,ix,jx", a, a, c, c),
        "c022": ein("x,y,ix,iy", b, b, c, c),
        "c112": ein("ijk,xyz,i,x,jy,kz", e, e, a, b, c, c),
        "c113": ein("i,ix,jx,jy,y", a, c, c, c, b),
        "c123": ein("ijk,i,xj,x,yk,yl,l", e, b, c, a, c, c, b),
        "c204": ein("i,ix,jx,jy,ky,k", a, c, c, c, c, a),
        "c024": ein("i,xi,xj,yj,yk,k", b, c, c, c, c, b),
        "c213": ein("xyz,x,yi,i,zj,wj,w", e, a, c, b, c, c, a),
        "c214": ein("ijk,i,xj,x,yk,yl,zl,z", e, b, c, a, c, c, c, a),
        "c124": ein("xyz,x,yj,j,zk,wk,wl,l", e, a, c, b, c, c, c, b),
        "c125": ein("ijk,i,xj,xl,l,yk,ym,zm,z", e, b, c, c, b, c, c, c, a),
        "c215": ein("xyz,x,yi,wi,w,zk,rk,rl,l", e, a, c, c, a, c, c, c, b),
        "c306": ein("xyz,x,yi,wi,w,zj,rj,rk,sk,s", e, a, c, c, a, c, c, c, c, a),
        "c036": ein("ijk,i,xj,xl,l,yk,ym,zm,zs,s", e, b, c, c, b, c, c, c, c, b),
    }


def principal_minor_sums(m):
    """``S_k`` as sums of all k x k principal minors."""
    n = m.shape[0]
    return np.array([
        sum(np.linalg.det(m[np.ix_(idx, idx)]).real for idx in itertools.combinations(range(n), k))
        for k in range(1, n + 1)
    ])


def esym(values):
    """Elementary symmetric polynomials e_1..e_n by enumeration."""
    n = len(values)
    return np.array([
        sum(np.prod(c) for c in itertools.combinations(values, k)) for k in range(1, n + 1)
    ])


def partial_trace_loops(m, r, s, keep):
    if keep == "A":
        out = np.zeros((r, r), dtype=complex)
        for i in range(r):
            for k in range(r):
                out[i, k] = sum(m[i * s + j, k * s + j] for j in range(s))
    else:
        out = np.zeros((s, s), dtype=complex)
        for j in range(s):
            for l in range(s):
                out[j, l] = sum(m[i * s + j, i * s + l] for i in range(r))
    return out


def trace_structure_constants(mats):
    """Loop evaluation of ``Tr({l_a,l_b} l_c)/4`` and ``-i Tr([l_a,l_b] l_c)/4``."""
    n = len(mats)
    d = np.zeros((n, n, n))
    f = np.zeros((n, n, n))
    for a in range(n):
        for b in range(n):
            anti = mats[a] @ mats[b] + mats[b] @ mats[a]
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            for c in range(n):
                d[a, b, c] = (0.25 * np.trace(anti @ mats[c])).real
                f[a, b, c] = (-0.25j * np.trace(comm @ mats[c])).real
    return d, f


def molien_geometric(numerator, degrees, kmax):
    """Series of ``numerator / prod(1 - q^e)`` as numerator times geometric series."""
    s = [0] * (kmax + 1)
    for e, c in numerator.items():
        if e <= kmax:
            s[e] += c
    for deg in degrees:
        for k in range(deg, kmax + 1):
            s[k] += s[k - deg]
    return s


def qubit_density(alpha):
    """``(I + alpha.sigma)/2`` written out by hand."""
    x, y, z = alpha
    return 0.5 * np.array([[1 + z, x - 1j * y], [x + 1j * y, 1 - z]])
