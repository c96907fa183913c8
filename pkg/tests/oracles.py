"""Independent brute-force oracles used to freeze expected values.

Everything here deliberately avoids the library's computation paths: Stokes
components come from explicit kron chains and traces, partial traces from
index summation loops, concurrence from the textbook non-Hermitian product.
"""

import functools

import numpy as np

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = [I2, SX, SY, SZ]


def kron_chain(mats):
    return functools.reduce(np.kron, mats)


def stokes_component(rho, digits):
    """Tr(rho sigma_d1 x ... x sigma_dn) by explicit construction."""
    return complex(np.trace(rho @ kron_chain([PAULIS[d] for d in digits])))


def stokes_tensor_bruteforce(rho, n):
    import itertools

    vals = np.empty(4**n)
    for m, digits in enumerate(itertools.product(range(4), repeat=n)):
        c = stokes_component(rho, digits)
        assert abs(c.imag) < 1e-8
        vals[m] = c.real
    return vals


def minkowski_bruteforce(vals, n):
    import itertools

    total = 0.0
    for m, digits in enumerate(itertools.product(range(4), repeat=n)):
        weight = sum(1 for d in digits if d != 0)
        total += (-1) ** weight * vals[m] ** 2
    return total / 2**n


def partial_trace_bruteforce(rho, n, keep):
    """Index-summation partial trace; keep is 1-based and sorted."""
    keep0 = [k - 1 for k in keep]
    traced = [k for k in range(n) if k not in keep0]
    m = len(keep0)
    out = np.zeros((2**m, 2**m), dtype=complex)
    for r in range(2**n):
        for c in range(2**n):
            rb = [(r >> (n - 1 - k)) & 1 for k in range(n)]
            cb = [(c >> (n - 1 - k)) & 1 for k in range(n)]
            if any(rb[k] != cb[k] for k in traced):
                continue
            ro = sum(rb[k] << (m - 1 - i) for i, k in enumerate(keep0))
            co = sum(cb[k] << (m - 1 - i) for i, k in enumerate(keep0))
            out[ro, co] += rho[r, c]
    return out


def spin_flip_bruteforce(rho, n):
    f = kron_chain([SY] * n)
    return f @ rho.conj() @ f


def concurrence_bruteforce(rho):
    """Textbook route: eigenvalues of the non-Hermitian product rho rho_tilde."""
    rt = spin_flip_bruteforce(rho, 2)
    ev = np.linalg.eigvals(rho @ rt)
    lam = np.sqrt(np.abs(np.sort(ev.real)[::-1]))
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def lorentz_bruteforce(a):
    l = np.empty((4, 4))
    for mu in range(4):
        for nu in range(4):
            l[mu, nu] = (
                0.5 * np.trace(PAULIS[mu] @ a @ PAULIS[nu] @ a.conj().T).real
            )
    return l
