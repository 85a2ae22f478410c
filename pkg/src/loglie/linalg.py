"""Dense exact linear algebra over the rationals.

Matrices are lists of lists of Fraction, vectors are lists of Fraction.
Includes the univariate polynomial helpers (gcd, squarefree part, matrix
evaluation) needed by the Jordan decomposition and eigenvalue code.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalError

_F0 = Fraction(0)
_F1 = Fraction(1)


def fvec(values):
    return [Fraction(v) for v in values]


def fmat(rows):
    return [fvec(r) for r in rows]


def zeros(m, n):
    return [[_F0] * n for _ in range(m)]


def identity(n):
    return [[_F1 if i == j else _F0 for j in range(n)] for i in range(n)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c):
    c = Fraction(c)
    return [[c * v for v in row] for row in A]


def mat_mul(A, B):
    n = len(B)
    p = len(B[0]) if n else 0
    out = []
    for row in A:
        acc = [_F0] * p
        for k, a in enumerate(row):
            if a:
                rb = B[k]
                for j in range(p):
                    if rb[j]:
                        acc[j] += a * rb[j]
        out.append(acc)
    return out


def mat_vec(A, v):
    return [sum((a * x for a, x in zip(row, v) if a and x), _F0) for row in A]


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_sub(u, v):
    return [a - b for a, b in zip(u, v)]


def vec_scale(u, c):
    c = Fraction(c)
    return [c * a for a in u]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []

def is_zero_matrix(A):
    return all(not v for row in A for v in row)


def mat_pow(A, k):
    n = len(A)
    result = identity(n)
    base = [row[:] for row in A]
    while k > 0:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def trace(A):
    return sum((A[i][i] for i in range(len(A))), _F0)


def rref(A):
    """Reduced row echelon form.  Returns (R, pivot column list)."""
    R = [fvec(row) for row in A]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if R[i][c]), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        piv = R[r][c]
        R[r] = [v / piv for v in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R[:r], pivots


def rank(A):
    return len(rref(A)[0])


def solve(A, b):
    """One exact solution of A x = b, or None if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [fvec(A[i]) + [Fraction(b[i])] for i in range(m)]
    R, pivots = rref(aug)
    x = [_F0] * n
    for i, c in enumerate(pivots):
        if c == n:
            return None  # pivot in the rhs column
        x[c] = R[i][-1]
    return x


def nullspace(A):
    """Basis of the right kernel, canonical (one vector per free column)."""
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    R, pivots = rref(A)
    pivset = set(pivots)
    basis = []
    for c in range(n):
        if c in pivset:
            continue
        v = [_F0] * n
        v[c] = _F1
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][c]
        basis.append(v)
    return basis


class Subspace:
    """Incremental row space with exact membership tests."""

    def __init__(self, vectors=(), dim=None):
        self._rows = []      # reduced rows
        self._pivots = []
        self.ambient = dim
        for v in vectors:
            self.add(v)

    @property
    def dim(self):
        return len(self._rows)

    def _reduce(self, v):
        v = fvec(v)
        for row, p in zip(self._rows, self._pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v):
        """Add v to the span; returns True if the dimension grew."""
        if self.ambient is None:
            self.ambient = len(v)
        red = self._reduce(v)
        p = next((i for i, a in enumerate(red) if a), None)
        if p is None:
            return False
        piv = red[p]
        red = [a / piv for a in red]
        for i in range(len(self._rows)):
            if self._rows[i][p]:
                f = self._rows[i][p]
                self._rows[i] = [a - f * b for a, b in zip(self._rows[i], red)]
        self._rows.append(red)
        self._pivots.append(p)
        order = sorted(range(len(self._pivots)), key=lambda i: self._pivots[i])
        self._rows = [self._rows[i] for i in order]
        self._pivots = [self._pivots[i] for i in order]
        return True

    def contains(self, v):
        return all(not a for a in self._reduce(v))

    def basis(self):
        return [row[:] for row in self._rows]


def coordinates_in(generators, v):
    """Express v as a linear combination of `generators`, or None."""
    if not generators:
        return None if any(v) else []
    return solve(transpose(generators), v)


def intersect(U, V):
    """Basis of span(U) ∩ span(V); U, V are lists of row vectors."""
    if not U or not V:
        return []
    n = len(U[0])
    A = [[U[i][r] for i in range(len(U))] + [-V[j][r] for j in range(len(V))]
         for r in range(n)]
    out = Subspace(dim=n)
    for coeffs in nullspace(A):
        vec = [_F0] * n
        for i in range(len(U)):
            if coeffs[i]:
                vec = [a + coeffs[i] * b for a, b in zip(vec, U[i])]
        out.add(vec)
    return out.basis()


def det(A):
    """Exact determinant by fraction-friendly Gaussian elimination."""
    n = len(A)
    M = [fvec(row) for row in A]
    sign = _F1
    result = _F1
    for c in range(n):
        pr = next((i for i in range(c, n) if M[i][c]), None)
        if pr is None:
            return _F0
        if pr != c:
            M[c], M[pr] = M[pr], M[c]
            sign = -sign
        piv = M[c][c]
        result *= piv
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / piv
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return sign * result


# ---------------------------------------------------------------------------
# Univariate polynomials over Q: dense ascending coefficient lists.
# ---------------------------------------------------------------------------

def upoly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def upoly_add(p, q):
    n = max(len(p), len(q))
    return upoly_trim([(p[i] if i < len(p) else _F0) + (q[i] if i < len(q) else _F0)
                       for i in range(n)])


def upoly_scale(p, c):
    c = Fraction(c)
    return upoly_trim([c * a for a in p])


def upoly_mul(p, q):
    if not p or not q:
        return []
    out = [_F0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return upoly_trim(out)


def upoly_divmod(p, q):
    if not q:
        raise ZeroDivisionError("univariate division by zero")
    p = p[:]
    dq = len(q) - 1
    lead = q[-1]
    quot = [_F0] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        shift = len(p) - 1 - dq
        c = p[-1] / lead
        quot[shift] = c
        for i in range(len(q)):
            p[shift + i] -= c * q[i]
        upoly_trim(p)
    return upoly_trim(quot), p


def upoly_gcd(p, q):
    a, b = p[:], q[:]
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [v / lead for v in a]
    return a


def upoly_xgcd(p, q):
    """Extended gcd: returns (g, u, v) with u p + v q = g, g monic."""
    a, b = p[:], q[:]
    ua, va = [_F1], []
    ub, vb = [], [_F1]
    while b:
        quot, rem = upoly_divmod(a, b)
        a, b = b, rem
        ua, ub = ub, upoly_add(ua, upoly_scale(upoly_mul(quot, ub), -1))
        va, vb = vb, upoly_add(va, upoly_scale(upoly_mul(quot, vb), -1))
    if a:
        lead = a[-1]
        a = [v / lead for v in a]
        ua = upoly_scale(ua, 1 / lead)
        va = upoly_scale(va, 1 / lead)
    return a, ua, va


def upoly_derivative(p):
    return upoly_trim([i * p[i] for i in range(1, len(p))])


def upoly_squarefree(p):
    g = upoly_gcd(p, upoly_derivative(p))
    if len(g) <= 1:
        out = p[:]
    else:
        out, rem = upoly_divmod(p, g)
        if rem:
            raise InternalError("squarefree part division left a remainder")
    if out:
        lead = out[-1]
        out = [v / lead for v in out]
    return out


def upoly_is_squarefree(p):
    return len(upoly_gcd(p, upoly_derivative(p))) <= 1


def upoly_eval(p, x):
    acc = _F0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def upoly_eval_matrix(p, M):
    n = len(M)
    acc = zeros(n, n)
    for c in reversed(p):
        acc = mat_mul(acc, M)
        if c:
            for i in range(n):
                acc[i][i] += c
    return acc


def charpoly(M):
    """Monic characteristic polynomial via Faddeev-LeVerrier (ascending)."""
    n = len(M)
    coeffs = [_F0] * (n + 1)
    coeffs[n] = _F1
    Mk = identity(n)
    for k in range(1, n + 1):
        Mk = mat_mul(M, Mk)
        ck = -trace(Mk) / k
        coeffs[n - k] = ck
        for i in range(n):
            Mk[i][i] += ck
    return coeffs


def minpoly(M):
    """Monic minimal polynomial, found from the first dependent power."""
    n = len(M)
    powers = [identity(n)]
    span = Subspace(dim=n * n)
    flat = [v for row in powers[0] for v in row]
    span.add(flat)
    current = powers[0]
    for _ in range(n):
        current = mat_mul(current, M)
        flat = [v for row in current for v in row]
        if not span.add(flat):
            gens = [[v for row in P for v in row] for P in powers]
            coeffs = coordinates_in(gens, flat)
            if coeffs is None:
                raise InternalError("minimal polynomial dependence not solvable")
            p = [-c for c in coeffs] + [_F1]
            return upoly_trim(p)
        powers.append(current)
    raise InternalError("no dependence among matrix powers")


def _int_divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p):
    """All rational roots with multiplicities.

    Returns (roots, residual_degree) where residual_degree is the degree of
    the root-free cofactor (0 means p splits over Q).
    """
    p = upoly_trim([Fraction(v) for v in p])
    if len(p) <= 1:
        return [], 0
    roots = []
    mult0 = 0
    while p and not p[0]:
        p = p[1:]
        mult0 += 1
    if mult0:
        roots.append((_F0, mult0))
    if len(p) <= 1:
        return roots, 0
    from math import lcm
    den = lcm(*[c.denominator for c in p]) if len(p) > 1 else 1
    ip = [int(c * den) for c in p]
    a0, an = ip[0], ip[-1]
    candidates = set()
    for num in _int_divisors(a0):
        for d in _int_divisors(an):
            candidates.add(Fraction(num, d))
            candidates.add(Fraction(-num, d))
    for cand in sorted(candidates):
        mult = 0
        while len(p) > 1 and not upoly_eval(p, cand):
            p, rem = upoly_divmod(p, [-cand, _F1])
            if rem:
                raise InternalError("deflation by a verified root failed")
            mult += 1
        if mult:
            roots.append((cand, mult))
    return roots, max(len(p) - 1, 0)
