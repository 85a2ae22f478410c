"""Exact algorithms for finite-dimensional Lie algebras over Q.

A Lie algebra is a structure-constant table with rational entries; subspaces
are lists of coordinate vectors.  Everything here is exact: solvable radical
via the Killing form, a constructive Levi decomposition along the derived
series of the radical, Cartan subalgebras by deterministic regular-element
search, rational Jordan decomposition, and the split of a solvable linear
algebra into a semisimple part and its nilpotent ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import InternalError, NonSplitError
from .linalg import (Subspace, charpoly, coordinates_in, identity,
                     intersect, mat_mul, mat_pow, mat_sub, minpoly,
                     nullspace, rref, trace, upoly_derivative, upoly_divmod,
                     upoly_eval_matrix, upoly_gcd, upoly_is_squarefree,
                     upoly_mul, upoly_squarefree, upoly_xgcd, zeros)

_F0 = Fraction(0)
_F1 = Fraction(1)


class LieAlgebra:
    """Finite-dimensional Lie algebra given by exact structure constants."""

    def __init__(self, dim, brackets, labels=None, check=True):
        """`brackets` maps (i, j) with i < j to the coordinate vector of [e_i, e_j]."""
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f"e{i+1}" for i in range(dim))
        table = [[[_F0] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in brackets.items():
            if i == j:
                raise ValueError("diagonal bracket entries must be omitted")
            vec = linalg.fvec(vec)
            table[i][j] = vec
            table[j][i] = [-v for v in vec]
        self.table = table
        if check:
            violation = self.validate()
            if violation is not None:
                raise ValueError(f"not a Lie algebra: {violation}")

    def bracket(self, u, v):
        out = [_F0] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                row = self.table[i][j]
                c = a * b
                for k in range(self.dim):
                    if row[k]:
                        out[k] += c * row[k]
        return out

    def ad(self, u):
        """Matrix of ad(u) acting on coordinate columns."""
        cols = []
        for j in range(self.dim):
            ej = [_F1 if t == j else _F0 for t in range(self.dim)]
            cols.append(self.bracket(u, ej))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def basis_vector(self, i):
        return [_F1 if t == i else _F0 for t in range(self.dim)]

    def basis(self):
        return [self.basis_vector(i) for i in range(self.dim)]

    def validate(self):
        """None when antisymmetry and every Jacobi triple hold, else a report."""
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = self.table[i][j]
                rhs = [-v for v in self.table[j][i]]
                if lhs != rhs:
                    return f"antisymmetry fails at ({self.labels[i]}, {self.labels[j]})"
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(i + 1, self.dim):
                ej = self.basis_vector(j)
                for k in range(j + 1, self.dim):
                    ek = self.basis_vector(k)
                    acc = self.bracket(ei, self.bracket(ej, ek))
                    acc = linalg.vec_add(acc, self.bracket(ej, self.bracket(ek, ei)))
                    acc = linalg.vec_add(acc, self.bracket(ek, self.bracket(ei, ej)))
                    if any(acc):
                        return (f"Jacobi fails at ({self.labels[i]}, "
                                f"{self.labels[j]}, {self.labels[k]})")
        return None

    def __repr__(self):
        return f"<LieAlgebra dim={self.dim} basis={','.join(self.labels)}>"


def abelian(n, labels=None):
    return LieAlgebra(n, {}, labels=labels)


def sl2():
    """Standard basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    return LieAlgebra(3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]},
                      labels=("h", "e", "f"))


def gl2():
    """Basis (z, h, e, f) with central z on top of sl2."""
    return LieAlgebra(4, {(1, 2): [0, 0, 2, 0], (1, 3): [0, 0, 0, -2],
                          (2, 3): [0, 1, 0, 0]},
                      labels=("z", "h", "e", "f"))


# ---------------------------------------------------------------------------
# Subspace machinery on coordinate vectors.
# ---------------------------------------------------------------------------

def span_basis(vectors, dim):
    space = Subspace(dim=dim)
    for v in vectors:
        space.add(v)
    return space.basis()


def bracket_span(g, U, V):
    vecs = [g.bracket(u, v) for u in U for v in V]
    return span_basis(vecs, g.dim)


def derived_series(g, start=None):
    """Chain g = D^0 >= D^1 >= ... with D^{k+1} = [D^k, D^k], until stable."""
    current = start if start is not None else g.basis()
    chain = [span_basis(current, g.dim)]
    while True:
        nxt = bracket_span(g, chain[-1], chain[-1])
        if len(nxt) == len(chain[-1]):
            break
        chain.append(nxt)
        if not nxt:
            break
    return chain

def lower_central_series(g, start=None):
    first = span_basis(start if start is not None else g.basis(), g.dim)
    chain = [first]
    while True:
        nxt = bracket_span(g, first, chain[-1])
        if len(nxt) == len(chain[-1]):
            break
        chain.append(nxt)
        if not nxt:
            break
    return chain


def is_solvable(g, subspace=None):
    return not derived_series(g, subspace)[-1]


def is_nilpotent(g, subspace=None):
    return not lower_central_series(g, subspace)[-1]


def killing_form(g):
    ads = [g.ad(g.basis_vector(i)) for i in range(g.dim)]
    return [[trace(mat_mul(ads[i], ads[j])) for j in range(g.dim)]
            for i in range(g.dim)]


def radical(g):
    """Solvable radical: the Killing-orthogonal complement of [g, g]."""
    if g.dim == 0:
        return []
    K = killing_form(g)
    derived = bracket_span(g, g.basis(), g.basis())
    rows = [linalg.mat_vec(K, d) for d in derived]
    rad = nullspace(rows) if rows else g.basis()
    if not is_solvable(g, rad):
        raise InternalError("Killing-orthogonal radical candidate is not solvable")
    if bracket_span(g, g.basis(), rad):
        inside = Subspace(rad, dim=g.dim)
        for v in bracket_span(g, g.basis(), rad):
            if not inside.contains(v):
                raise InternalError("radical candidate is not an ideal")
    return rad


def restrict(g, basis_vectors, labels=None):
    """Structure constants of a bracket-closed subspace in the given basis."""
    m = len(basis_vectors)
    brackets = {}
    for i in range(m):
        for j in range(i + 1, m):
            vec = g.bracket(basis_vectors[i], basis_vectors[j])
            coords = coordinates_in(basis_vectors, vec)
            if coords is None:
                raise InternalError("subspace is not closed under the bracket")
            if any(coords):
                brackets[(i, j)] = coords
    return LieAlgebra(m, brackets, labels=labels, check=False)


def quotient(g, ideal_vectors):
    """Quotient by an ideal.

    Returns (q, lift, project) where lift maps quotient coordinates to g and
    project maps g coordinates to quotient coordinates.
    """
    ideal = Subspace(ideal_vectors, dim=g.dim)
    pivots = set()
    reduced = ideal.basis()
    _, pivcols = rref(reduced) if reduced else ([], [])
    pivots = set(pivcols)
    comp_idx = [i for i in range(g.dim) if i not in pivots]
    lifts = [g.basis_vector(i) for i in comp_idx]

    def project(vec):
        red = vec[:]
        for row in reduced:
            p = next(i for i, a in enumerate(row) if a)
            if red[p]:
                f = red[p]
                red = [a - f * b for a, b in zip(red, row)]
        return [red[i] for i in comp_idx]

    m = len(comp_idx)
    brackets = {}
    for i in range(m):
        for j in range(i + 1, m):
            coords = project(g.bracket(lifts[i], lifts[j]))
            if any(coords):
                brackets[(i, j)] = coords
    q = LieAlgebra(m, brackets, check=False)

    def lift(vec):
        out = [_F0] * g.dim
        for c, base in zip(vec, lifts):
            if c:
                out = [a + c * b for a, b in zip(out, base)]
        return out

    return q, lift, project


def centralizer(g, vectors, inside=None):
    """Basis of {x in `inside` : [x, v] = 0 for all v in vectors}."""
    inside = inside if inside is not None else g.basis()
    if not inside:
        return []
    rows = []
    for v in vectors:
        adv = g.ad(v)
        # [x, v] = -ad(v) x; constraint rows over coefficients of x in `inside`.
        for k in range(g.dim):
            rows.append([sum((-adv[k][t] * b[t] for t in range(g.dim)), _F0)
                         for b in inside])
    if not rows:
        coeffs = identity(len(inside))
    else:
        coeffs = nullspace(rows)
    out = []
    for cv in coeffs:
        vec = [_F0] * g.dim
        for c, b in zip(cv, inside):
            if c:
                vec = [a + c * t for a, t in zip(vec, b)]
        out.append(vec)
    return span_basis(out, g.dim)


def normalizer(g, subspace_vectors):
    """Basis of {x : [x, S] <= S} for the span S of the given vectors.

    Unknowns are the coordinates of x together with expansion coefficients
    c_{s,t} realizing [x, s] = sum_t c_{s,t} s_t for each basis element s.
    """
    sbasis = Subspace(subspace_vectors, dim=g.dim).basis()
    nb = len(sbasis)
    if nb == 0:
        return g.basis()
    images = [[g.bracket(g.basis_vector(j), s) for s in sbasis]
              for j in range(g.dim)]
    width = g.dim + nb * nb
    rows = []
    for s_idx in range(nb):
        for k in range(g.dim):
            row = [_F0] * width
            for j in range(g.dim):
                row[j] = images[j][s_idx][k]
            for t in range(nb):
                row[g.dim + s_idx * nb + t] = -sbasis[t][k]
            rows.append(row)
    out = []
    for sol in nullspace(rows):
        vec = sol[:g.dim]
        if any(vec):
            out.append(vec)
    return span_basis(out, g.dim)


# ---------------------------------------------------------------------------
# Levi decomposition.
# ---------------------------------------------------------------------------

def levi_subalgebra(g):
    """A semisimple complement to the radical (zero basis when g is solvable).

    Constructive: quotient along the derived series of the radical and solve
    the linear bracket-correction equations at the abelian steps.
    """
    rad = radical(g)
    if not rad:
        return g.basis()
    if len(rad) == g.dim:
        return []
    der = bracket_span(g, rad, rad)
    if not der:
        return _levi_abelian_radical(g, rad)
    q, lift, project = quotient(g, der)
    s_q = levi_subalgebra(q)
    pre = [lift(v) for v in s_q] + der
    sub = span_basis(pre, g.dim)
    sub_alg = restrict(g, sub)
    inner = levi_subalgebra(sub_alg)
    out = []
    for v in inner:
        vec = [_F0] * g.dim
        for c, b in zip(v, sub):
            if c:
                vec = [a + c * t for a, t in zip(vec, b)]
        out.append(vec)
    return span_basis(out, g.dim)


def _levi_abelian_radical(g, rad):
    """Levi complement when the radical is abelian (one Whitehead solve)."""
    rad_space = Subspace(rad, dim=g.dim)
    _, pivots = rref(rad_space.basis())
    comp_idx = [i for i in range(g.dim) if i not in set(pivots)]
    cbasis = [g.basis_vector(i) for i in comp_idx]
    m = len(cbasis)
    r = len(rad)

    full = cbasis + rad_space.basis()

    def split(vec):
        coords = coordinates_in(full, vec)
        if coords is None:
            raise InternalError("basis completion failed in the Levi step")
        return coords[:m], coords[m:]

    # Quotient structure constants and defects d_ij in the radical.
    cbar = {}
    defect = {}
    for i in range(m):
        for j in range(i + 1, m):
            comp_part, rad_part = split(g.bracket(cbasis[i], cbasis[j]))
            cbar[(i, j)] = comp_part
            defect[(i, j)] = rad_part

    # Unknowns a_i in the radical (coordinates over rad basis): m*r of them.
    # Equation per (i<j):  ad(c_i) a_j - ad(c_j) a_i - sum_k cbar^k_ij a_k = -d_ij.
    rows = []
    rhs = []
    rad_basis = rad_space.basis()

    def ad_on_rad(vec):
        """Matrix of ad(vec) restricted to the radical, in rad coordinates."""
        cols = []
        for b in rad_basis:
            img = g.bracket(vec, b)
            coords = coordinates_in(rad_basis, img)
            if coords is None:
                raise InternalError("radical is not ad-invariant")
            cols.append(coords)
        return [[cols[j][i] for j in range(r)] for i in range(r)]

    ad_mats = [ad_on_rad(c) for c in cbasis]
    for (i, j), d in defect.items():
        coeff = cbar[(i, j)]
        for t in range(r):
            row = [_F0] * (m * r)
            for u in range(r):
                row[j * r + u] += ad_mats[i][t][u]
                row[i * r + u] -= ad_mats[j][t][u]
            for k in range(m):
                row[k * r + t] -= coeff[k]
            rows.append(row)
            rhs.append(-d[t])
    if rows:
        sol = linalg.solve(rows, rhs)
        if sol is None:
            raise InternalError("Whitehead correction system is inconsistent")
    else:
        sol = [_F0] * (m * r)
    out = []
    for i in range(m):
        vec = cbasis[i][:]
        for u in range(r):
            c = sol[i * r + u]
            if c:
                vec = [a + c * b for a, b in zip(vec, rad_basis[u])]
        out.append(vec)
    check = restrict(g, out)  # raises if not closed
    if not _is_semisimple(check):
        raise InternalError("Levi candidate is not semisimple")
    return out


def _is_semisimple(g):
    if g.dim == 0:
        return True
    return abs(linalg.det(killing_form(g))) != 0


# ---------------------------------------------------------------------------
# Cartan subalgebras via Engel subalgebras of regular elements.
# ---------------------------------------------------------------------------

def _candidate_vectors(dim, bound):
    """Deterministic enumeration, sparse vectors first, max entry == bound."""
    from itertools import combinations, product
    for nnz in range(1, dim + 1):
        for positions in combinations(range(dim), nnz):
            for values in product(range(-bound, bound + 1), repeat=nnz):
                if any(v == 0 for v in values):
                    continue
                if max(abs(v) for v in values) != bound:
                    continue
                first = values[0]
                if first < 0:
                    continue  # E(x) = E(-x): skip global sign flips
                vec = [_F0] * dim
                for p, v in zip(positions, values):
                    vec[p] = Fraction(v)
                yield vec


def cartan_subalgebra(g, max_bound=5):
    """A Cartan subalgebra: nilpotent and self-normalizing.

    Deterministic search over small-integer coordinate vectors; the Engel
    subalgebra (generalized nullspace of ad x) of the first element found
    whose Engel subalgebra is nilpotent is returned.  Over Q all Cartan
    subalgebras have the same dimension, the rank.
    """
    if g.dim == 0:
        return []
    if is_nilpotent(g):
        return g.basis()
    for bound in range(1, max_bound + 1):
        for vec in _candidate_vectors(g.dim, bound):
            adx = g.ad(vec)
            power = mat_pow(adx, g.dim)
            engel = nullspace(power)
            if len(engel) == g.dim:
                continue
            try:
                sub = restrict(g, engel)
            except InternalError:
                raise InternalError("Engel subspace is not a subalgebra")
            if is_nilpotent(sub):
                return engel
    raise NonSplitError(
        f"no rational regular element with coordinates bounded by {max_bound}")


# ---------------------------------------------------------------------------
# Jordan-Chevalley decomposition of a rational matrix.
# ---------------------------------------------------------------------------

@dataclass
class JordanPair:
    semisimple: list
    nilpotent: list


def jordan_chevalley(M):
    """Commuting semisimple + nilpotent split, computed rationally.

    Newton iteration on the squarefree part g of the characteristic
    polynomial: S <- S - g(S) * v(S) with v an inverse of g' modulo g.  No
    eigenvalues are ever extracted.
    """
    n = len(M)
    M = linalg.fmat(M)
    if n == 0:
        return JordanPair([], [])
    p = charpoly(M)
    g = upoly_squarefree(p)
    gp = upoly_derivative(g)
    one, u, v = upoly_xgcd(g, gp)
    if len(one) != 1:
        raise InternalError("squarefree part shares a factor with its derivative")
    S = [row[:] for row in M]
    for _ in range(n + 1):
        gS = upoly_eval_matrix(g, S)
        if linalg.is_zero_matrix(gS):
            break
        corr = mat_mul(gS, upoly_eval_matrix(v, S))
        S = mat_sub(S, corr)
    else:
        raise InternalError("Jordan iteration failed to converge")
    N = mat_sub(M, S)
    if not linalg.is_zero_matrix(mat_pow(N, n)):
        raise InternalError("Jordan nilpotent part is not nilpotent")
    if mat_mul(S, N) != mat_mul(N, S):
        raise InternalError("Jordan parts do not commute")
    if not upoly_is_squarefree(minpoly(S)):
        raise InternalError("Jordan semisimple part has a repeated factor")
    return JordanPair(semisimple=S, nilpotent=N)


# ---------------------------------------------------------------------------
# Linear (matrix) Lie algebras and the split r0 = d0 + n0.
# ---------------------------------------------------------------------------

class MatrixLieAlgebra:
    """A Lie algebra of matrices: independent basis plus abstract constants."""

    def __init__(self, matrices, labels=None):
        self.space_dim = len(matrices[0]) if matrices else 0
        picked = []
        span = Subspace(dim=self.space_dim ** 2 if matrices else 1)
        for mat in matrices:
            flat = [v for row in mat for v in row]
            if span.add(flat):
                picked.append(linalg.fmat(mat))
        self.matrices = picked
        self._span = span
        self.abstract = self._structure(labels)

    @property
    def dim(self):
        return len(self.matrices)

    def _structure(self, labels):
        flats = [[v for row in m for v in row] for m in self.matrices]
        brackets = {}
        for i in range(len(self.matrices)):
            for j in range(i + 1, len(self.matrices)):
                comm = mat_sub(mat_mul(self.matrices[i], self.matrices[j]),
                               mat_mul(self.matrices[j], self.matrices[i]))
                flat = [v for row in comm for v in row]
                coords = coordinates_in(flats, flat)
                if coords is None:
                    raise InternalError("matrix span is not bracket closed")
                if any(coords):
                    brackets[(i, j)] = coords
        return LieAlgebra(len(self.matrices), brackets, labels=labels, check=False)

    def matrix_of(self, coords):
        out = zeros(self.space_dim, self.space_dim)
        for c, m in zip(coords, self.matrices):
            if c:
                out = linalg.mat_add(out, linalg.mat_scale(m, c))
        return out

    def contains_matrix(self, mat):
        return self._span.contains([v for row in mat for v in row])

    def coordinates_of(self, mat):
        flats = [[v for row in m for v in row] for m in self.matrices]
        return coordinates_in(flats, [v for row in mat for v in row])


def nilpotent_elements(matrices):
    """Basis of the nilpotent elements of a solvable span of matrices.

    Uses the radical of the enveloping associative algebra: in characteristic
    zero that radical is the kernel of the trace form, and for a solvable
    (triangularizable) family the nilpotent elements of the span are exactly
    the span's intersection with it.
    """
    mats = [m for m in matrices if not linalg.is_zero_matrix(m)]
    if not mats:
        return []
    n = len(mats[0])
    algebra = [identity(n)]
    span = Subspace(dim=n * n)
    span.add([v for row in algebra[0] for v in row])
    queue = list(mats)
    for m in queue:
        if span.add([v for row in m for v in row]):
            algebra.append(m)
    # close under products
    i = 0
    while i < len(algebra):
        j = 0
        while j < len(algebra):
            prod = mat_mul(algebra[i], algebra[j])
            if span.add([v for row in prod for v in row]):
                algebra.append(prod)
            j += 1
        i += 1
    gram = [[trace(mat_mul(a, b)) for b in algebra] for a in algebra]
    rad_coords = nullspace(gram)
    rad_flat = []
    for coords in rad_coords:
        acc = zeros(n, n)
        for c, a in zip(coords, algebra):
            if c:
                acc = linalg.mat_add(acc, linalg.mat_scale(a, c))
        rad_flat.append([v for row in acc for v in row])
    span_flat = [[v for row in m for v in row] for m in mats]
    inter = intersect(span_flat, rad_flat)
    out = []
    for flat in inter:
        mat = [flat[i * n:(i + 1) * n] for i in range(n)]
        if not linalg.is_zero_matrix(mat_pow(mat, n)):
            raise InternalError("trace-radical produced a non-nilpotent element")
        out.append(mat)
    return out


def radical_split(mla):
    """Split the solvable radical r0 of a linear Lie algebra as d0 + n0.

    n0 is the ideal of nilpotent matrices in r0; d0 is an abelian complement
    of semisimple matrices assembled from Jordan parts inside iterated
    centralizers.  Raises NonSplitError when a semisimple part escapes r0,
    i.e. outside the algebraic, rationally split setting.
    """
    g = mla.abstract
    rad_coords = radical(g)
    rad_mats = [mla.matrix_of(v) for v in rad_coords]
    n0 = nilpotent_elements(rad_mats)
    n = mla.space_dim
    rad_flat = [[v for row in m for v in row] for m in rad_mats]
    n0_flat = [[v for row in m for v in row] for m in n0]
    d0 = []
    d0_flat = []
    rad_space = Subspace(rad_flat, dim=n * n if rad_flat else 1)

    while len(d0) + len(n0) < len(rad_mats):
        taken = Subspace(n0_flat + d0_flat, dim=n * n)
        pick = None
        for coords in _centralizer_in_radical(mla, rad_coords, d0):
            mat = mla.matrix_of(coords)
            flat = [v for row in mat for v in row]
            if not taken.contains(flat):
                pick = mat
                break
        if pick is None:
            raise NonSplitError("no commuting complement inside the radical")
        S = jordan_chevalley(pick).semisimple
        s_flat = [v for row in S for v in row]
        if not rad_space.contains(s_flat):
            raise NonSplitError("semisimple part escapes the radical")
        d0.append(S)
        d0_flat.append(s_flat)

    _verify_split(mla, rad_mats, d0, n0)
    return d0, n0


def _centralizer_in_radical(mla, rad_coords, d0_mats):
    """Radical vectors commuting with every matrix in d0, deterministic order."""
    if not d0_mats:
        return list(rad_coords)
    # Solve for coefficient vectors c with [sum c_i R_i, d] = 0 for all d.
    R = [mla.matrix_of(v) for v in rad_coords]
    n = mla.space_dim
    sysrows = []
    for d in d0_mats:
        comms = [mat_sub(mat_mul(r, d), mat_mul(d, r)) for r in R]
        for a in range(n):
            for b in range(n):
                sysrows.append([comm[a][b] for comm in comms])
    out = []
    for cv in nullspace(sysrows):
        vec = [_F0] * len(rad_coords[0])
        for c, rv in zip(cv, rad_coords):
            if c:
                vec = [x + c * y for x, y in zip(vec, rv)]
        out.append(vec)
    return out


def _verify_split(mla, rad_mats, d0, n0):
    n = mla.space_dim
    rad_flat = [[v for row in m for v in row] for m in rad_mats]
    parts = [[v for row in m for v in row] for m in d0 + n0]
    if len(span_flat_basis(parts, n * n)) != len(rad_mats):
        raise InternalError("d0 + n0 does not span the radical")
    for a in d0:
        if not upoly_is_squarefree(minpoly(a)):
            raise InternalError("a d0 element is not semisimple")
        for b in d0:
            if mat_mul(a, b) != mat_mul(b, a):
                raise InternalError("d0 is not abelian")
    n0_space = Subspace([[v for row in m for v in row] for m in n0],
                        dim=n * n if n0 else 1)
    for m1 in n0:
        for m2 in rad_mats:
            comm = mat_sub(mat_mul(m1, m2), mat_mul(m2, m1))
            if not n0_space.contains([v for row in comm for v in row]):
                raise InternalError("n0 is not an ideal of the radical")


def span_flat_basis(vectors, dim):
    space = Subspace(dim=dim)
    for v in vectors:
        space.add(v)
    return space.basis()


# ---------------------------------------------------------------------------
# Classification records used by the pipeline.
# ---------------------------------------------------------------------------

@dataclass
class ReductivityReport:
    reductive: bool
    kernel_dim: int
    n0_dim: int
    d0_dim: int
    linear_formal: bool


def is_reductive_singularity(data):
    """Classify via the linear shadow: injective projection plus n0 = 0.

    `data` is the InitialLieData of a hypersurface.  Reductivity means the
    radical maps isomorphically onto the semisimple torus part d0 of the
    linear algebra, which over the ground field comes down to kernel_dim == 0
    together with a vanishing nilpotent ideal in the radical split.
    """
    mats = [m for m in data.lambda0]
    nonzero = [m for m in mats if not linalg.is_zero_matrix(m)]
    if not nonzero:
        reductive = data.kernel_dim == 0
        return ReductivityReport(reductive=reductive, kernel_dim=data.kernel_dim,
                                 n0_dim=0, d0_dim=0, linear_formal=reductive)
    mla = MatrixLieAlgebra(mats)
    d0, n0 = radical_split(mla)
    reductive = (data.kernel_dim == 0) and not n0
    return ReductivityReport(reductive=reductive, kernel_dim=data.kernel_dim,
                             n0_dim=len(n0), d0_dim=len(d0),
                             linear_formal=reductive)


def rank_and_multihomogeneity(mla):
    """(rank, n_D, s_D) of a faithful linear Lie algebra.

    rank is the dimension of a Cartan subalgebra; n_D the dimension of its
    subspace of nilpotent matrices; s_D their difference, the maximal
    multihomogeneity.
    """
    if mla.dim == 0:
        return 0, 0, 0
    h = cartan_subalgebra(mla.abstract)
    h_mats = [mla.matrix_of(v) for v in h]
    nil = nilpotent_elements(h_mats)
    rank = len(h)
    n_d = len(nil)
    return rank, n_d, rank - n_d
