"""Weight diagrams of the Levi action and the singular-locus lower bound.

Pipeline: a Cartan subalgebra of a Levi factor of the initial Lie algebra is
rescaled onto the coroot lattice, its matrices acting on the cotangent space
are simultaneously diagonalized over Q, and the resulting weight multiset W
feeds a combinatorial maximization: over subsets C of W whose l-fold sumsets
avoid W for every l >= k-1, maximize the total multiplicity d(C).  That
maximum is a lower bound for the dimension of the singular locus whenever k,
the order of the singularity, is at least 3.

The avoidance condition quantifies over infinitely many l.  It is decided in
two regimes: when 0 is outside the convex hull of C an exact separating
functional truncates the search to finitely many l (complete); otherwise
representability of each weight as a non-negative integer combination of C
is searched with budgeted branch and bound, and a budget overrun is reported
honestly as "empty up to a bound", never as proven.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import liealg, linalg, ratlp
from .errors import (InternalError, IrrationalWeightError, NonSplitError,
                     NotCommutingError, NotSemisimpleError)
from .linalg import (Subspace, coordinates_in, mat_mul, mat_vec, minpoly,
                     nullspace, rational_roots, upoly_is_squarefree)

_F0 = Fraction(0)
_F1 = Fraction(1)


@dataclass
class WeightDiagram:
    """Finite multiset of rational weight tuples with multiplicities."""

    rank: int
    entries: dict                      # weight tuple -> multiplicity
    eigenvectors: dict = field(default_factory=dict)
    basis_change: list = None          # columns are the joint eigenvectors

    @property
    def total(self):
        return sum(self.entries.values())

    def weights(self):
        return sorted(self.entries)

    def __str__(self):
        inner = ", ".join(f"{tuple(str(c) for c in w)}: {m}"
                          for w, m in sorted(self.entries.items()))
        return "{" + inner + "}"


def weight_diagram(matrices, dim=None):
    """Simultaneous rational eigendecomposition of commuting semisimple matrices.

    With no matrices the diagram degenerates to the single empty weight
    carrying the whole space (`dim` must then be given).  Irrational
    eigenvalues, non-semisimple or non-commuting inputs raise their named
    errors instead of being approximated.
    """
    matrices = [linalg.fmat(m) for m in matrices]
    if not matrices:
        if dim is None:
            raise ValueError("need the ambient dimension for an empty Cartan list")
        diagram = WeightDiagram(rank=0, entries={(): dim})
        diagram.eigenvectors[()] = [
            [(_F1 if i == j else _F0) for j in range(dim)] for i in range(dim)]
        diagram.basis_change = linalg.identity(dim)
        return diagram
    n = len(matrices[0])
    for a in matrices:
        for b in matrices:
            if mat_mul(a, b) != mat_mul(b, a):
                raise NotCommutingError("the Cartan matrices do not commute")

    blocks = [((), linalg.identity(n))]
    for M in matrices:
        refined = []
        for prefix, basis in blocks:
            sub = _restrict_matrix(M, basis)
            mp = minpoly(sub)
            if not upoly_is_squarefree(mp):
                raise NotSemisimpleError("a Cartan matrix is not semisimple")
            roots, residual = rational_roots(mp)
            if residual:
                raise IrrationalWeightError(
                    "a Cartan matrix has an irrational eigenvalue")
            covered = 0
            for lam, _ in sorted(roots):
                shifted = [row[:] for row in sub]
                for i in range(len(shifted)):
                    shifted[i][i] -= lam
                kernel = nullspace(shifted)
                vectors = []
                for kv in kernel:
                    vec = [_F0] * n
                    for c, b in zip(kv, basis):
                        if c:
                            vec = [x + c * y for x, y in zip(vec, b)]
                    vectors.append(vec)
                covered += len(vectors)
                refined.append((prefix + (lam,), vectors))
            if covered != len(basis):
                raise NotSemisimpleError("eigenspaces do not fill the block")
        blocks = refined

    entries = {}
    eigenvectors = {}
    for weight, vectors in blocks:
        entries[weight] = entries.get(weight, 0) + len(vectors)
        eigenvectors.setdefault(weight, []).extend(vectors)
    diagram = WeightDiagram(rank=len(matrices), entries=entries,
                            eigenvectors=eigenvectors)
    cols = []
    for weight in sorted(eigenvectors):
        cols.extend(eigenvectors[weight])
    diagram.basis_change = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
    if diagram.total != n:
        raise InternalError("weight multiplicities do not sum to the dimension")
    return diagram


def _restrict_matrix(M, basis):
    """Matrix of M on the invariant span of `basis`, in that basis."""
    cols = []
    for b in basis:
        img = mat_vec(M, b)
        coords = coordinates_in(basis, img)
        if coords is None:
            raise InternalError("subspace is not invariant under a Cartan matrix")
        cols.append(coords)
    m = len(basis)
    return [[cols[j][i] for j in range(m)] for i in range(m)]


# ---------------------------------------------------------------------------
# Cartan normalization onto the coroot lattice.
# ---------------------------------------------------------------------------

def normalize_cartan(s_alg, h_vectors, to_matrix):
    """Coroot basis of a split Cartan subalgebra, mapped to matrices on V.

    `s_alg` is the (semisimple) Levi factor as an abstract algebra,
    `h_vectors` a Cartan subalgebra basis in its coordinates, `to_matrix`
    the representation.  The roots of s under h are decomposed over Q (a
    failure raises NonSplitError), a simple system is chosen, and each simple
    root contributes the coroot h with alpha(h) = 2.  Weights of any
    finite-dimensional representation are integral on this basis.
    """
    if s_alg.dim == 0 or not h_vectors:
        return []
    ad_mats = [s_alg.ad(h) for h in h_vectors]
    try:
        diagram = weight_diagram(ad_mats, dim=s_alg.dim)
    except (IrrationalWeightError, NotSemisimpleError) as exc:
        raise NonSplitError(f"non-split Cartan: {exc}") from exc
    roots = [w for w in diagram.entries if any(w)]
    zero_dim = diagram.entries.get(tuple([_F0] * len(h_vectors)), 0)
    if zero_dim != len(h_vectors):
        raise InternalError("Cartan subalgebra is not self-centralizing")
    for root in roots:
        if diagram.entries[root] != 1:
            raise InternalError("a root space is not one dimensional")

    functional = _separating_functional(roots)
    positive = [r for r in roots if _pair(functional, r) > 0]
    simple = []
    for r in sorted(positive):
        if not any((tuple(a + b for a, b in zip(p, q)) == r)
                   for p in positive for q in positive):
            simple.append(r)
    if len(simple) != len(h_vectors):
        raise NonSplitError("simple roots do not form a basis of the Cartan dual")

    coroots = []
    for alpha in simple:
        e_vec = diagram.eigenvectors[alpha][0]
        neg = tuple(-a for a in alpha)
        f_vec = diagram.eigenvectors[neg][0]
        t = s_alg.bracket(e_vec, f_vec)
        coords = coordinates_in(h_vectors, t)
        if coords is None:
            raise InternalError("[e, f] left the Cartan subalgebra")
        val = sum((a * c for a, c in zip(alpha, coords)), _F0)
        if not val:
            raise InternalError("alpha([e,f]) vanished on a root")
        coroots.append([2 * c / val for c in t])
    # Cartan integers must be integral: a cross-check of the normalization.
    for beta in roots:
        for alpha, h in zip(simple, coroots):
            coords = coordinates_in(h_vectors, h)
            val = sum((b * c for b, c in zip(beta, coords)), _F0)
            if val.denominator != 1:
                raise InternalError("a Cartan integer is not an integer")
    return [to_matrix(h) for h in coroots]


def _pair(functional, vec):
    return sum((a * b for a, b in zip(functional, vec)), _F0)


def _separating_functional(vectors):
    """Deterministic rational functional nonzero on every given vector."""
    if not vectors:
        return ()
    r = len(vectors[0])
    base = 1
    while True:
        functional = tuple(Fraction(base ** i) for i in range(r))
        if all(_pair(functional, v) for v in vectors):
            return functional
        base += 1
        if base > 10000:
            raise InternalError("no separating functional found")


# ---------------------------------------------------------------------------
# Sumset avoidance (the combinatorial core).
# ---------------------------------------------------------------------------

@dataclass
class SubsetCertificate:
    """Re-verifiable decision record for one subset C.

    verdict: "in" (avoids W for all l >= k-1), "excluded" (a witness sum
    hits W), or "bounded" (no collision up to checked_up_to, search budget
    exhausted before a proof).
    """

    subset: tuple
    k: int
    verdict: str
    functional: tuple = None      # "in", separation case
    check_range: tuple = None     # (k-1, L) of the directly expanded range
    witness_counts: dict = None   # "excluded": weight -> count
    witness_target: tuple = None  # the element of W that is hit
    tag: str = None
    checked_up_to: int = None     # "bounded"

    @property
    def proven(self):
        return self.verdict in ("in", "excluded")


def _sumsets_upto(C, lmax):
    """[S_1, ..., S_lmax] where S_l maps each l-fold sum to one representation."""
    out = []
    current = {c: {c: 1} for c in C}
    for _ in range(lmax):
        out.append(current)
        nxt = {}
        for total, rep in current.items():
            for c in C:
                t = tuple(a + b for a, b in zip(total, c))
                if t not in nxt:
                    counts = dict(rep)
                    counts[c] = counts.get(c, 0) + 1
                    nxt[t] = counts
        current = nxt
    return out


# Decision data per subset is independent of k; cache it.
_PROFILE_CACHE = {}


def _avoidance_profile(C, weights, budget):
    """k-independent decision data for the subset C against the weight set.

    Either ("sep", functional, top, hits) with hits mapping each l <= top
    whose l-fold sumset meets W to a witness (target, counts), or
    ("hull0", kernel, reach, complete, checked) where reach maps each
    representable weight to witness counts and `complete` tells whether the
    representability search was exhaustive.
    """
    key = (C, frozenset(weights), budget)
    if key in _PROFILE_CACHE:
        return _PROFILE_CACHE[key]
    r = len(C[0])
    point = ratlp.feasible(r, ge=[(list(c), 1) for c in C], free=set(range(r)))
    if point is not None:
        ell = tuple(point)
        lmax = max((_pair(ell, w) for w in weights), default=_F0)
        top = max(math.floor(lmax), 0)
        hits = {}
        if top >= 1:
            layers = _sumsets_upto(C, top)
            for l in range(1, top + 1):
                for total, rep in layers[l - 1].items():
                    if total in weights:
                        hits[l] = (total, rep)
                        break
        profile = ("sep", ell, top, hits)
    else:
        kernel = _kernel_relation(C, r)
        reach, complete, checked = _reachable_targets(C, weights, budget)
        profile = ("hull0", kernel, reach, complete, checked)
    _PROFILE_CACHE[key] = profile
    return profile


def sumset_avoidance(C, W, k, budget=100000):
    """Decide whether every l-fold sumset of C avoids W for all l >= k-1.

    W may be a WeightDiagram or an iterable of weight tuples; C must be a
    subset of the weights of W.  See the module docstring for the two-case
    decision procedure; certificates re-verify independently.
    """
    if k < 3:
        raise ValueError("the avoidance condition is indexed by k >= 3")
    weights = frozenset(W.entries) if isinstance(W, WeightDiagram) else frozenset(
        tuple(Fraction(c) for c in w) for w in W)
    C = tuple(sorted(tuple(Fraction(c) for c in w) for w in C))
    for c in C:
        if c not in weights:
            raise ValueError("C must consist of weights of W")
    if not C:
        return SubsetCertificate(subset=C, k=k, verdict="in", tag="empty subset")
    r = len(C[0])

    if r == 0:
        # Only the empty weight exists; its sums are itself, which is in W.
        rep = {(): k - 1}
        return SubsetCertificate(subset=C, k=k, verdict="excluded",
                                 witness_counts=rep, witness_target=())

    profile = _avoidance_profile(C, weights, budget)

    if profile[0] == "sep":
        # A functional ell >= 1 on C bounds the l whose sums can meet W.
        _, ell, top, hits = profile
        for l in range(k - 1, top + 1):
            if l in hits:
                target, rep = hits[l]
                return SubsetCertificate(subset=C, k=k, verdict="excluded",
                                         witness_counts=rep, witness_target=target)
        return SubsetCertificate(subset=C, k=k, verdict="in",
                                 functional=ell, check_range=(k - 1, max(top, k - 2)))

    # 0 in conv(C): a non-negative integer kernel relation exists and boosts
    # any representation to arbitrarily large l, so plain representability of
    # some w in W decides exclusion.
    _, kernel, reach, complete, checked = profile
    for w in sorted(reach):
        counts = dict(reach[w])
        total = sum(counts.values())
        while total < k - 1:
            for c, m in kernel.items():
                counts[c] = counts.get(c, 0) + m
            total = sum(counts.values())
        _verify_witness(counts, w)
        return SubsetCertificate(subset=C, k=k, verdict="excluded",
                                 witness_counts=counts, witness_target=w)
    if complete:
        return SubsetCertificate(subset=C, k=k, verdict="in",
                                 tag="no weight is representable over C")
    return SubsetCertificate(subset=C, k=k, verdict="bounded",
                             tag="search budget exceeded", checked_up_to=checked)


def _reachable_targets(C, weights, budget):
    """Which weights are non-negative integer combinations of C.

    Saturates the reachable set inside a box wide enough, by the Steinitz
    rearrangement bound, to contain a witness path for every representable
    target; complete whenever the box fits in the node budget.  Falls back
    to a budgeted depth-first search with exact LP pruning otherwise.
    Returns (reach, complete, checked_bound).
    """
    r = len(C[0])
    denom = 1
    for vec in list(C) + list(weights):
        for coord in vec:
            denom = denom * coord.denominator // math.gcd(denom, coord.denominator)
    Ci = [tuple(int(c * denom) for c in vec) for vec in C]
    Wi = {tuple(int(c * denom) for c in vec): vec for vec in weights}
    max_c = max(max(abs(x) for x in vec) for vec in Ci)
    max_w = max((max((abs(x) for x in vec), default=0) for vec in Wi), default=0)
    bound = max_w + (r + 2) * max_c
    volume = (2 * bound + 1) ** r
    if volume <= max(budget, 1):
        reach_int = _saturate_box(Ci, bound)
        reach = {}
        for wi, w in Wi.items():
            if wi in reach_int:
                reach[w] = {C[Ci.index(c)]: m for c, m in reach_int[wi].items()}
        return reach, True, None
    # Fallback: budgeted per-target search.
    reach = {}
    complete = True
    for wi, w in sorted(Wi.items()):
        result = _representation_search(C, w, budget)
        if result == "exhausted":
            complete = False
        elif result is not None:
            reach[w] = result
    return reach, complete, bound


def _saturate_box(Ci, bound):
    """All non-empty non-negative combinations of Ci inside the box, with one
    witness multiset per reachable point."""
    reach = {}
    frontier = []
    for c in Ci:
        if all(abs(x) <= bound for x in c):
            if c not in reach:
                reach[c] = {c: 1}
                frontier.append(c)
    while frontier:
        nxt = []
        for p in frontier:
            base = reach[p]
            for c in Ci:
                q = tuple(a + b for a, b in zip(p, c))
                if q in reach or any(abs(x) > bound for x in q):
                    continue
                counts = dict(base)
                counts[c] = counts.get(c, 0) + 1
                reach[q] = counts
                nxt.append(q)
        frontier = nxt
    return reach


def _verify_witness(counts, target):
    r = len(target)
    acc = tuple(sum((Fraction(c[i]) * m for c, m in counts.items()), _F0)
                for i in range(r))
    if acc != tuple(target):
        raise InternalError("an exclusion witness failed to re-verify")


def _kernel_relation(C, r):
    """Non-negative integer relation sum m_c c = 0 with sum m_c >= 1."""
    cons = [([c[i] for c in C], 0) for i in range(r)]
    cons.append(([1] * len(C), 1))
    point = ratlp.feasible(len(C), eq=cons)
    if point is None:
        raise InternalError("0 in conv(C) but no convex relation found")
    denom = 1
    for v in point:
        denom = denom * v.denominator // math.gcd(denom, v.denominator)
    counts = {}
    for c, v in zip(C, point):
        m = int(v * denom)
        if m:
            counts[c] = m
    return counts


def _representation_search(C, w, budget):
    """Find non-negative integers n_c with sum n_c c = w.

    Depth-first over the n_c with exact LP pruning; every LP-feasible node
    either closes or spends budget.  Returns a dict, None (proven absent) or
    "exhausted" when the node budget ran out before a proof.
    """
    s = len(C)
    r = len(w)
    state = {"nodes": 0, "exhausted": False}

    def lp_box(fixed):
        """Feasibility and upper bound for the next variable."""
        idx = len(fixed)
        rem = [Fraction(w[i]) - sum((Fraction(C[j][i]) * fixed[j]
                                     for j in range(idx)), _F0)
               for i in range(r)]
        nvars = s - idx
        if nvars == 0:
            return all(not v for v in rem), None
        eqs = [([C[idx + j][i] for j in range(nvars)], rem[i]) for i in range(r)]
        status, x, val = ratlp.solve(nvars, objective=[1] + [0] * (nvars - 1),
                                     maximize=True, eq=eqs)
        if status == ratlp.INFEASIBLE:
            return False, None
        if status == ratlp.UNBOUNDED:
            return True, None
        return True, math.floor(val)

    def dfs(fixed):
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["exhausted"] = True
            return None
        idx = len(fixed)
        feasible_here, ub = lp_box(fixed)
        if not feasible_here:
            return None
        if idx == s:
            return {C[j]: fixed[j] for j in range(s) if fixed[j]}
        if ub is None:
            ub = budget  # unbounded direction: cap and remember honesty
            state["capped"] = True
        for val in range(ub + 1):
            if state["exhausted"]:
                return None
            found = dfs(fixed + [val])
            if found is not None:
                return found
        return None

    state["capped"] = False
    found = dfs([])
    if found is not None:
        return found
    if state["exhausted"] or state["capped"]:
        return "exhausted"
    return None


def verify_certificate(cert, W, k):
    """Independent re-check of a certificate's witness data."""
    weights = set(W.entries) if isinstance(W, WeightDiagram) else set(
        tuple(Fraction(c) for c in w) for w in W)
    if cert.verdict == "excluded":
        total = sum(cert.witness_counts.values())
        if total < k - 1:
            return False
        if any(c not in cert.subset for c in cert.witness_counts):
            return False
        target = cert.witness_target
        r = len(target)
        acc = tuple(sum((Fraction(c[i]) * m for c, m in cert.witness_counts.items()),
                        _F0) for i in range(r))
        return acc == tuple(target) and target in weights
    if cert.verdict == "in" and cert.functional is not None:
        if any(_pair(cert.functional, c) < 1 for c in cert.subset):
            return False
        lo, hi = cert.check_range
        layers = _sumsets_upto(cert.subset, max(hi, lo - 1)) if cert.subset else []
        for l in range(lo, hi + 1):
            if any(t in weights for t in layers[l - 1]):
                return False
        top = max((_pair(cert.functional, w) for w in weights), default=_F0)
        return hi >= math.floor(top) or math.floor(top) < lo
    return True  # degenerate tags carry no witness to re-check


# ---------------------------------------------------------------------------
# The maximization M_k and the bound report.
# ---------------------------------------------------------------------------

@dataclass
class MResult:
    value: object              # int or -inf
    maximizer: tuple
    proven: bool
    certificates: dict = field(default_factory=dict)


def compute_M(W, k, budget=100000):
    """max d(C) over subsets C avoiding W at every level l >= k-1.

    Returns -inf for k < 3 or when only the empty subset avoids.  When some
    subset's decision hit the search budget the result is flagged as a lower
    bound (`proven` False) rather than silently trusted.
    """
    if k < 3:
        return MResult(value=-math.inf, maximizer=(), proven=True)
    weights = sorted(W.entries)
    best = -math.inf
    best_subset = ()
    proven = True
    excluded_masks = []
    certificates = {}
    n = len(weights)
    masks = sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), m))
    for mask in masks:
        if any(em & mask == em for em in excluded_masks):
            continue
        C = tuple(weights[i] for i in range(n) if mask >> i & 1)
        cert = sumset_avoidance(C, W, k, budget=budget)
        certificates[C] = cert
        if cert.verdict == "excluded":
            excluded_masks.append(mask)
            continue
        d = sum(W.entries[c] for c in C)
        if cert.verdict == "bounded":
            if d > best:
                proven = False
            continue
        if d > best or (d == best and (best_subset == () or C < best_subset)):
            best = d
            best_subset = C
    return MResult(value=best, maximizer=best_subset, proven=proven,
                   certificates=certificates)


def rank_lower_bound_check(rank, W, k, budget=100000):
    """Verify M_k >= rank via the facet subset of the convex hull of W.

    Picks a facet of conv(W) not through the origin, takes C = W on that
    facet, and checks both avoidance and d(C) >= rank.
    """
    if k < 3:
        raise ValueError("the bound needs k >= 3")
    if rank < 1:
        raise ValueError("the bound needs a nonzero Levi factor")
    weights = sorted(W.entries)
    facet = _facet_subset(weights)
    if facet is None:
        return False
    cert = sumset_avoidance(facet, W, k, budget=budget)
    if cert.verdict != "in":
        return False
    return sum(W.entries[c] for c in facet) >= rank


def _facet_subset(weights):
    """Weights on some facet of the convex hull not through 0, or None."""
    if not weights:
        return None
    r = len(weights[0])
    if r == 0:
        return None
    for subset in combinations(weights, r):
        rows = [list(w) for w in subset]
        sol = linalg.solve(rows, [_F1] * r)
        if sol is None:
            continue
        values = [_pair(tuple(sol), w) for w in weights]
        if any(v > 1 for v in values):
            continue
        facet = tuple(w for w, v in zip(weights, values) if v == 1)
        # Facet needs affine dimension r - 1: r affinely independent points.
        if _affine_rank(facet) == r - 1:
            return facet
    return None


def _affine_rank(points):
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return linalg.rank(diffs) if diffs else 0


# ---------------------------------------------------------------------------
# Weight of the defining polynomial (the weight-zero check).
# ---------------------------------------------------------------------------

def weight_of_f(f, cartan_matrices, basis_change=None):
    """Common weight tuple of all monomials of f in eigencoordinates, or None.

    The Cartan matrices must act diagonally in the coordinates given by
    `basis_change` (columns = joint eigenvectors; identity when omitted).
    For the normalized Cartan of a Levi factor the expected answer is the
    zero tuple.
    """
    ring = f.ring
    n = ring.nvars
    rank = len(cartan_matrices)
    if rank == 0:
        return ()
    if basis_change is None:
        basis_change = linalg.identity(n)
    images = []
    for j in range(n):
        images.append(sum((ring.var(i) * basis_change[i][j] for i in range(n)
                           if basis_change[i][j]), ring.zero))
    transformed = f.compose(images)

    var_weights = []
    for j in range(n):
        col = [basis_change[i][j] for i in range(n)]
        wt = []
        for M in cartan_matrices:
            img = mat_vec(M, col)
            lam = None
            for a, b in zip(img, col):
                if b:
                    lam = a / b
                    break
            if lam is None:
                raise ValueError("a zero column in the eigenbasis")
            if mat_vec(M, col) != [lam * c for c in col]:
                raise ValueError("coordinates are not joint eigenvectors")
            wt.append(lam)
        var_weights.append(tuple(wt))

    seen = None
    for mono in transformed.terms:
        wt = tuple(sum((Fraction(e) * var_weights[i][t] for i, e in enumerate(mono)),
                       _F0) for t in range(rank))
        if seen is None:
            seen = wt
        elif seen != wt:
            return None
    return seen


# ---------------------------------------------------------------------------
# The bound report.
# ---------------------------------------------------------------------------

@dataclass
class BoundReport:
    order: object                    # int (or inf for f = 0)
    M: object                        # int or -inf, None if undecided
    M_proven: bool
    maximizer: tuple
    sing_dim: object                 # int or -inf
    verdict: str                     # "holds", "fails", "vacuous"
    diagram: WeightDiagram = None
    flags: list = field(default_factory=list)


def levi_weight_diagram(data):
    """Weight diagram of a Levi factor of the initial algebra on m/m^2.

    Returns (diagram, levi_basis, cartan_basis); for a solvable algebra the
    degenerate diagram with the single empty weight is produced.
    """
    lie = data.lie
    n = data.module.ring.nvars
    levi = liealg.levi_subalgebra(lie)
    if not levi:
        return weight_diagram([], dim=n), [], []
    s_alg = liealg.restrict(lie, levi)
    h_local = liealg.cartan_subalgebra(s_alg)

    def to_matrix(local_coords):
        coords = [_F0] * lie.dim
        for c, b in zip(local_coords, levi):
            if c:
                coords = [x + c * y for x, y in zip(coords, b)]
        return data.matrix_of(coords)

    mats = normalize_cartan(s_alg, h_local, to_matrix)
    diagram = weight_diagram(mats, dim=n)
    return diagram, levi, h_local


def theorem13_check(f, budget=100000):
    """Assemble the order, the weight diagram, M_ord and the bound verdict.

    For order < 3 the bound is vacuous by definition and no Levi machinery
    is touched.  The singular-locus dimension always comes from the ideal of
    f and its partials.
    """
    from . import logder

    order = f.order()
    sing = ideal_dimension_of_singular_locus(f)
    if order < 3:
        return BoundReport(order=order, M=-math.inf, M_proven=True, maximizer=(),
                           sing_dim=sing, verdict="vacuous")
    module = logder.logarithmic_derivations(f)
    if not logder.product_test(module):
        from .errors import SmoothFactorError
        raise SmoothFactorError("hypersurface is a product with a smooth factor")
    data = logder.initial_lie_algebra(module)
    diagram, levi, _ = levi_weight_diagram(data)
    result = compute_M(diagram, int(order), budget=budget)
    flags = list(module.flags)
    if not result.proven:
        flags.append("empty up to bound")
    if result.value == -math.inf:
        verdict = "vacuous"
    else:
        verdict = "holds" if sing >= result.value else "fails"
    return BoundReport(order=order, M=result.value, M_proven=result.proven,
                       maximizer=result.maximizer, sing_dim=sing,
                       verdict=verdict, diagram=diagram, flags=flags)


def ideal_dimension_of_singular_locus(f):
    from .groebner import ideal_dimension
    return ideal_dimension([f] + f.gradient())
