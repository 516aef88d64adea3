"""Exact integral Chevalley-basis engine.

Structure constants are fixed by the extraspecial-pair convention: positive
roots are totally ordered by (height, coords); for each non-simple gamma the
extraspecial pair is the decomposition gamma = eps + eta with minimal eps, and
N_{eps,eta} = +(p+1) with p the length of the eps-string below eta.  All other
constants follow from the Jacobi identity and the cyclic relation

    N_{a,b} / (c,c) = N_{b,c} / (a,a) = N_{c,a} / (b,b)   (a + b + c = 0).

Any consistent sign convention would do; every property asserted downstream
is convention-invariant.

Elements of g are sparse dicts over the basis (H^{alpha_1}, .., H^{alpha_r},
x^alpha in root order, positives first).  Scalars are Gaussian rationals so
the compact real form and Cayley standard triples stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import CompactRoot, NotARoot
from .grading import evaluate
from .rootdata import RootSystem

# -- Gaussian rationals -------------------------------------------------------


@dataclass(frozen=True)
class GaussianRational:
    """x + i y with exact rational x, y."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(Fraction(value), Fraction(0))

    def __add__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other):
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other):
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.of(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError
        return self * GaussianRational(other.re / n, -other.im / n)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __repr__(self):
        return f"({self.re}+{self.im}i)"


I_UNIT = GaussianRational(Fraction(0), Fraction(1))
HALF_I = GaussianRational(Fraction(0), Fraction(1, 2))


# -- structure constants ------------------------------------------------------


class StructureConstants:
    """Integral Chevalley-basis bracket data for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._order = {b: k for k, b in enumerate(rs.positive_roots)}
        self.n_table = self._build_positive_table()
        self._extend_table()
        self._build_basis()

    # magnitudes: |N_{a,b}| = p + 1 with p the a-string length below b
    def _string_down(self, a, b) -> int:
        rs = self.rs
        p = 0
        cur = b
        while True:
            cur = tuple(x - y for x, y in zip(cur, a))
            if not rs.is_root(cur):
                return p
            p += 1

    def _build_positive_table(self) -> dict:
        rs = self.rs
        table: dict = {}

        def key(root):
            return (sum(root), root)

        def n_mixed(a, bneg):
            """N_{a, -bneg} for positive a, bneg with a - bneg a root."""
            diff = tuple(x - y for x, y in zip(a, bneg))
            if sum(diff) > 0:
                # cyclic with c = -(a - bneg)
                num = rs.bilinear(diff, diff)
                den = rs.bilinear(a, a)
                val = Fraction(-num * table[(bneg, diff)], den)
            else:
                delta = tuple(-x for x in diff)
                num = rs.bilinear(delta, delta)
                den = rs.bilinear(bneg, bneg)
                val = Fraction(num * table[(delta, a)], den)
            if val.denominator != 1:
                raise AssertionError("non-integral structure constant")
            return int(val)

        for gamma in rs.positive_roots:
            if sum(gamma) < 2:
                continue
            pairs = []
            for a in rs.positive_roots:
                if key(a) >= key(gamma):
                    break
                b = tuple(x - y for x, y in zip(gamma, a))
                if rs.is_root(b) and sum(b) > 0 and key(a) <= key(b):
                    pairs.append((a, b))
            pairs.sort(key=lambda ab: key(ab[0]))
            eps, eta = pairs[0]
            n_extra = self._string_down(eps, eta) + 1
            table[(eps, eta)] = n_extra
            table[(eta, eps)] = -n_extra
            # N_{gamma, -eps} via the cyclic relation
            n_gamma_meps = Fraction(
                -rs.bilinear(eta, eta) * n_extra, rs.bilinear(gamma, gamma)
            )
            if n_gamma_meps.denominator != 1:
                raise AssertionError("non-integral structure constant")
            n_gamma_meps = int(n_gamma_meps)
            for a, b in pairs[1:]:
                term = 0
                a_eps = tuple(x - y for x, y in zip(a, eps))
                if rs.is_root(a_eps):
                    term += n_mixed(a, eps) * table[(a_eps, b)]
                b_eps = tuple(x - y for x, y in zip(b, eps))
                if rs.is_root(b_eps):
                    term += n_mixed(b, eps) * table[(a, b_eps)]
                val = Fraction(term, n_gamma_meps)
                if val.denominator != 1:
                    raise AssertionError("non-integral structure constant")
                val = int(val)
                expected = self._string_down(a, b) + 1
                if abs(val) != expected:
                    raise AssertionError(
                        f"|N| = {abs(val)} != string length {expected} at {a}+{b}"
                    )
                table[(a, b)] = val
                table[(b, a)] = -val
        return table

    def _extend_table(self):
        """Fill N_{a,b} for all sign combinations with a + b a root."""
        rs = self.rs
        full = dict(self.n_table)
        neg = lambda v: tuple(-x for x in v)

        def mixed(a, bpos):
            """N_{a, -bpos} for positive roots a != bpos with a - bpos a root."""
            diff = tuple(x - y for x, y in zip(a, bpos))
            if sum(diff) > 0:
                val = Fraction(
                    -rs.bilinear(diff, diff) * self.n_table[(bpos, diff)],
                    rs.bilinear(a, a),
                )
            else:
                delta = neg(diff)
                val = Fraction(
                    rs.bilinear(delta, delta) * self.n_table[(delta, a)],
                    rs.bilinear(bpos, bpos),
                )
            if val.denominator != 1:
                raise AssertionError("non-integral structure constant")
            return int(val)

        for a in rs.positive_roots:
            for b in rs.positive_roots:
                if a == b:
                    continue
                if rs.is_root(tuple(x - y for x, y in zip(a, b))):
                    v = mixed(a, b)
                    full[(a, neg(b))] = v
                    full[(neg(b), a)] = -v
                    full[(neg(a), b)] = -v
                    full[(b, neg(a))] = v
        for (a, b), v in list(full.items()):
            full[(neg(a), neg(b))] = -v
        self.n_table = full

    def _build_basis(self):
        rs = self.rs
        roots = list(rs.positive_roots) + [
            tuple(-c for c in b) for b in rs.positive_roots
        ]
        self.root_index = {b: rs.rank + k for k, b in enumerate(roots)}
        self.basis_roots = roots
        self.dim = rs.rank + len(roots)
        # dense integer bracket table on basis indices: (i, j) -> [(k, coeff)]
        table: dict = {}
        r = rs.rank
        for a, ia in self.root_index.items():
            # [H^{alpha_j}, x^a] = a(H^{alpha_j}) x^a
            for j in range(r):
                pair = sum(a[t] * rs.cartan[t][j] for t in range(r))
                if pair:
                    table[(j, ia)] = ((ia, pair),)
                    table[(ia, j)] = ((ia, -pair),)
            for b, ib in self.root_index.items():
                s = tuple(x + y for x, y in zip(a, b))
                if all(c == 0 for c in s):
                    coroot = rs.coroot(a)
                    table[(ia, ib)] = tuple(
                        (j, c) for j, c in enumerate(coroot) if c
                    )
                elif rs.is_root(s):
                    table[(ia, ib)] = ((self.root_index[s], self.n_table[(a, b)]),)
        self.bracket_table = table
        # Killing form closed-form data
        self.killing_h = tuple(
            tuple(
                sum(
                    evaluate(g, rs.coroot_s_coords(si)) * evaluate(g, rs.coroot_s_coords(sj))
                    for beta in rs.positive_roots
                    for g in (beta, tuple(-c for c in beta))
                )
                for sj in [tuple(1 if t == j else 0 for t in range(r)) for j in range(r)]
            )
            for si in [tuple(1 if t == i else 0 for t in range(r)) for i in range(r)]
        )

    # -- element algebra ----------------------------------------------------

    def x(self, alpha) -> dict:
        alpha = self.rs.check_root(alpha)
        return {self.root_index[alpha]: Fraction(1)}

    def h(self, j: int) -> dict:
        """H^{alpha_j} (1-based j)."""
        return {j - 1: Fraction(1)}

    def coroot_element(self, alpha) -> dict:
        return {
            j: Fraction(c) for j, c in enumerate(self.rs.coroot(alpha)) if c
        }

    def bracket(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, ci in u.items():
            if not ci:
                continue
            for j, cj in v.items():
                if not cj:
                    continue
                entry = self.bracket_table.get((i, j))
                if not entry:
                    continue
                c = ci * cj
                for k, coeff in entry:
                    cur = out.get(k, 0) + c * coeff
                    if cur:
                        out[k] = cur
                    elif k in out:
                        del out[k]
        return out

    def basis_bracket(self, i: int, j: int):
        return self.bracket_table.get((i, j), ())

    def killing(self, u: dict, v: dict):
        """B(u, v) = tr(ad u ad v), via the closed form on the basis."""
        rs = self.rs
        total = 0
        for i, ci in u.items():
            if not ci:
                continue
            for j, cj in v.items():
                if not cj:
                    continue
                if i < rs.rank and j < rs.rank:
                    total = total + ci * cj * self.killing_h[i][j]
                elif i >= rs.rank and j >= rs.rank:
                    a = self.basis_roots[i - rs.rank]
                    b = self.basis_roots[j - rs.rank]
                    if all(x + y == 0 for x, y in zip(a, b)):
                        h = self.rs.coroot(a)
                        bhh = sum(
                            h[s] * self.killing_h[s][t] * h[t]
                            for s in range(rs.rank)
                            for t in range(rs.rank)
                        )
                        total = total + ci * cj * Fraction(bhh, 2)
        return total


@lru_cache(maxsize=None)
def _structure_constants_cached(lie_type) -> StructureConstants:
    from .rootdata import build_root_system

    return StructureConstants(build_root_system(lie_type))


def structure_constants(rs: RootSystem) -> StructureConstants:
    return _structure_constants_cached(rs.lie_type)


def adjoint_matrix(sc: StructureConstants, element: dict) -> list:
    """Matrix of ad(element) on the Chevalley basis (columns = basis images)."""
    n = sc.dim
    mat = [[0] * n for _ in range(n)]
    for j in range(n):
        img = sc.bracket(element, {j: 1})
        for i, c in img.items():
            mat[i][j] = c
    return mat


def jacobi_residual(sc: StructureConstants, i: int, j: int, k: int) -> dict:
    """[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] on basis indices."""
    out: dict = {}

    def acc(a, bc):
        for m, c in sc.bracket({a: 1}, dict(bc)).items():
            cur = out.get(m, 0) + c
            if cur:
                out[m] = cur
            elif m in out:
                del out[m]

    acc(i, sc.basis_bracket(j, k))
    acc(j, sc.basis_bracket(k, i))
    acc(k, sc.basis_bracket(i, j))
    return out


# -- the rational/integral form ----------------------------------------------


@dataclass(frozen=True)
class RationalFormBasis:
    """Integral basis h^j = i H^{alpha_j}, u^alpha, v^alpha of g_Z."""

    grading_element: tuple
    h: tuple  # r vectors
    u: dict  # positive root -> vector
    v: dict  # positive root -> vector
    parity: dict  # positive root -> 0 (compact) or 1 (noncompact)
    compact_dim: int
    noncompact_dim: int


def _gr_vec(entries) -> dict:
    return {k: GaussianRational.of(c) for k, c in entries.items() if c}


def rational_form(sc: StructureConstants, T) -> RationalFormBasis:
    """The integral form g_Z = k_Z + k_Z^perp attached to the grading T.

    Closure and integrality of all basis brackets, the Cartan-decomposition
    block structure, theta^2 = 1 and the Killing-form signature are verified
    by explicit computation.
    """
    rs = sc.rs
    h = tuple(_gr_vec({j: I_UNIT}) for j in range(rs.rank))
    u, v, parity = {}, {}, {}
    for beta in rs.positive_roots:
        ib = sc.root_index[beta]
        ineg = sc.root_index[tuple(-c for c in beta)]
        odd = evaluate(beta, T) % 2
        parity[beta] = odd
        if odd:
            u[beta] = _gr_vec({ib: I_UNIT, ineg: -I_UNIT})
            v[beta] = _gr_vec({ib: 1, ineg: 1})
        else:
            u[beta] = _gr_vec({ib: 1, ineg: -1})
            v[beta] = _gr_vec({ib: I_UNIT, ineg: I_UNIT})
    basis = RationalFormBasis(
        tuple(T),
        h,
        u,
        v,
        parity,
        rs.rank + 2 * sum(1 for p in parity.values() if p == 0),
        2 * sum(1 for p in parity.values() if p == 1),
    )
    _verify_rational_form(sc, basis)
    return basis


def _integral_coordinates(sc: StructureConstants, basis: RationalFormBasis, vec: dict):
    """Coordinates of ``vec`` in the integral basis; None when not integral."""
    rs = sc.rs
    coords = []
    labels = []
    for j in range(rs.rank):
        c = GaussianRational.of(vec.get(j, 0))
        a = c / I_UNIT
        coords.append(a)
        labels.append(("h", j))
    for beta in basis.parity:
        ib = sc.root_index[beta]
        ineg = sc.root_index[tuple(-x for x in beta)]
        cp = GaussianRational.of(vec.get(ib, 0))
        cm = GaussianRational.of(vec.get(ineg, 0))
        if basis.parity[beta]:
            a_u = (cp - cm) / (2 * I_UNIT)
            a_v = (cp + cm) / 2
        else:
            a_u = (cp - cm) / 2
            a_v = (cp + cm) / (2 * I_UNIT)
        coords.append(a_u)
        labels.append(("u", beta))
        coords.append(a_v)
        labels.append(("v", beta))
    out = []
    for c in coords:
        if c.im != 0 or c.re.denominator != 1:
            return None
        out.append(int(c.re))
    return dict(zip(labels, out))


def theta(sc: StructureConstants, T, vec: dict) -> dict:
    """Cartan involution: +1 on k, -1 on k^perp; on root vectors
    theta(x^alpha) = (-1)^{alpha(T)} x^alpha."""
    rs = sc.rs
    out = {}
    for k, c in vec.items():
        if k < rs.rank:
            out[k] = c
        else:
            alpha = sc.basis_roots[k - rs.rank]
            out[k] = -c if evaluate(alpha, T) % 2 else c
    return out


def _verify_rational_form(sc: StructureConstants, basis: RationalFormBasis):
    rs = sc.rs
    members = []  # (block, vector): block 0 = k, 1 = k^perp
    for hj in basis.h:
        members.append((0, hj))
    for beta, p in basis.parity.items():
        members.append((p, basis.u[beta]))
        members.append((p, basis.v[beta]))
    for pa, a in members:
        for pb, b in members:
            br = sc.bracket(a, b)
            coords = _integral_coordinates(sc, basis, br)
            if coords is None:
                raise AssertionError("g_Z is not closed under the bracket")
            want_block = (pa + pb) % 2
            for (kind, label), c in coords.items():
                if c == 0:
                    continue
                block = 0 if kind == "h" else basis.parity[label]
                if block != want_block:
                    raise AssertionError("Cartan decomposition blocks violated")
    # theta is the identity on k, minus identity on k^perp, and squares to 1
    for p, vec in members:
        image = theta(sc, basis.grading_element, vec)
        twice = theta(sc, basis.grading_element, image)
        if twice != vec:
            raise AssertionError("theta^2 != 1")
        expected = vec if p == 0 else {k: -c for k, c in vec.items()}
        if image != expected:
            raise AssertionError("theta has the wrong sign on a block")
    # Killing form: negative definite on k_Z, positive definite on k_Z^perp
    for block, sign in ((0, -1), (1, 1)):
        vecs = [vec for p, vec in members if p == block]
        gram = [
            [_real_of(sc.killing(a, b)) for b in vecs] for a in vecs
        ]
        if not _definite(gram, sign):
            raise AssertionError("Killing form has the wrong signature")


def _real_of(value):
    if isinstance(value, GaussianRational):
        if value.im != 0:
            raise AssertionError("Killing value should be real")
        return value.re
    return Fraction(value)


def _definite(gram, sign) -> bool:
    """Sylvester's criterion on an exact symmetric matrix."""
    n = len(gram)
    m = [[sign * Fraction(x) for x in row] for row in gram]
    for k in range(1, n + 1):
        det = _det([row[:k] for row in m[:k]])
        if det <= 0:
            return False
    return True


def _det(mat):
    mat = [row[:] for row in mat]
    n = len(mat)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            f = mat[r][col] * inv
            if f:
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return det


# -- Cayley standard triples ---------------------------------------------------


def cayley_standard_triple(sc: StructureConstants, beta, T):
    """(y^beta, H', y^{-beta}) with H' = x^beta + x^{-beta} and
    y^{+-beta} = (i/2)(x^{-beta} - x^beta +- H^beta); beta must be noncompact."""
    rs = sc.rs
    beta = rs.check_root(beta)
    if evaluate(beta, T) % 2 == 0:
        raise CompactRoot(f"{beta} is compact for the given grading")
    ib = sc.root_index[beta]
    ineg = sc.root_index[tuple(-c for c in beta)]
    hb = sc.coroot_element(beta)
    y_plus = {ineg: HALF_I, ib: -HALF_I}
    y_minus = {ineg: HALF_I, ib: -HALF_I}
    for j, c in hb.items():
        y_plus[j] = y_plus.get(j, GaussianRational.of(0)) + HALF_I * c
        y_minus[j] = y_minus.get(j, GaussianRational.of(0)) - HALF_I * c
    y_plus = {k: GaussianRational.of(c) for k, c in y_plus.items() if GaussianRational.of(c)}
    y_minus = {k: GaussianRational.of(c) for k, c in y_minus.items() if GaussianRational.of(c)}
    h_prime = {ib: GaussianRational.of(1), ineg: GaussianRational.of(1)}
    _check_standard_triple(sc, y_plus, h_prime, y_minus)
    return y_plus, h_prime, y_minus


def _eq_vec(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    return all(
        GaussianRational.of(a.get(k, 0)) == GaussianRational.of(b.get(k, 0))
        for k in keys
    )


def _scale(c, vec: dict) -> dict:
    return {k: GaussianRational.of(v) * c for k, v in vec.items()}


def _check_standard_triple(sc, nplus, y, nminus):
    if not _eq_vec(sc.bracket(y, nplus), _scale(2, nplus)):
        raise AssertionError("[Y, N+] != 2 N+")
    if not _eq_vec(sc.bracket(y, nminus), _scale(-2, nminus)):
        raise AssertionError("[Y, N] != -2 N")
    if not _eq_vec(sc.bracket(nplus, nminus), y):
        raise AssertionError("[N+, N] != Y")


# -- the A1 disc model ---------------------------------------------------------

# Example matrices for sl2: x^a, H^a, x^{-a} in the defining representation.
SL2_X_PLUS = ((0, 1), (0, 0))
SL2_H = ((1, 0), (0, -1))
SL2_X_MINUS = ((0, 0), (1, 0))


def sl2_matrix(vec: dict, sc: StructureConstants):
    """Realize an sl2 Chevalley-coordinate vector as a 2x2 matrix."""
    if sc.rs.lie_type.rank != 1:
        raise NotARoot("defining representation only wired for A1")
    basis = {0: SL2_H, sc.root_index[(1,)]: SL2_X_PLUS, sc.root_index[(-1,)]: SL2_X_MINUS}
    out = [[GaussianRational.of(0)] * 2 for _ in range(2)]
    for k, c in vec.items():
        m = basis[k]
        for i in range(2):
            for j in range(2):
                out[i][j] = out[i][j] + GaussianRational.of(c) * m[i][j]
    return tuple(tuple(row) for row in out)


def a1_disc_coordinate_in_unit_disc(t) -> bool:
    """Exact check that exp(i t y^{-alpha}) o_1 stays inside the unit disc.

    Here i y^{-alpha} = (1/2)[[1, 1], [-1, -1]] (nilpotent) and o_1 = (1 : i);
    the disc coordinate is the ratio of homogeneous coordinates.
    """
    t = Fraction(t)
    m = [
        [1 + t / 2, t / 2],
        [-t / 2, 1 - t / 2],
    ]
    vec = (
        GaussianRational.of(m[0][0]) + GaussianRational.of(m[0][1]) * I_UNIT,
        GaussianRational.of(m[1][0]) + GaussianRational.of(m[1][1]) * I_UNIT,
    )
    return vec[1].norm_sq() < vec[0].norm_sq()


# -- the 7-dimensional representation of g2 ------------------------------------

G2_V7_WEIGHTS = ((2, 1), (1, 1), (1, 0), (0, 0), (-1, 0), (-1, -1), (-2, -1))


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _matsub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _matadd(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _matscale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def _commutator(a, b):
    return _matsub(_matmul(a, b), _matmul(b, a))


@lru_cache(maxsize=1)
def g2_seven_dim_rep() -> dict:
    """Weight-basis matrices of the full g2 Chevalley basis on V7.

    Lowering entries along the multiplicity-free sl2-strings are solved with
    residual signs fixed by requiring all Chevalley-basis brackets to hold;
    failure to find a consistent assignment is a hard error.
    """
    from .rootdata import LieType, build_root_system

    rs = build_root_system(LieType("G", 2))
    sc = structure_constants(rs)
    weights = G2_V7_WEIGHTS
    w_index = {w: k for k, w in enumerate(weights)}
    simples = ((1, 0), (0, 1))

    # alpha_i strings through the weight diagram, top weight first
    def strings(i):
        a = simples[i]
        tops = [
            w
            for w in weights
            if tuple(x + y for x, y in zip(w, a)) not in w_index
            and tuple(x - y for x, y in zip(w, a)) in w_index
        ]
        out = []
        for top in tops:
            chain = [top]
            while True:
                nxt = tuple(x - y for x, y in zip(chain[-1], a))
                if nxt not in w_index:
                    break
                chain.append(nxt)
            out.append(chain)
        return out

    all_strings = [strings(0), strings(1)]
    slots = [
        (i, si, k)
        for i in range(2)
        for si, chain in enumerate(all_strings[i])
        for k in range(len(chain) - 1)
    ]

    def build(signs):
        mats = {}
        for i in range(2):
            low = [[Fraction(0)] * 7 for _ in range(7)]
            up = [[Fraction(0)] * 7 for _ in range(7)]
            for si, chain in enumerate(all_strings[i]):
                n = len(chain) - 1
                cs = [signs[slots.index((i, si, k))] for k in range(n)]
                for k in range(n):
                    low[w_index[chain[k + 1]]][w_index[chain[k]]] = Fraction(cs[k])
                    up[w_index[chain[k]]][w_index[chain[k + 1]]] = Fraction(
                        (k + 1) * (n - k), cs[k]
                    )
            mats[sc.root_index[tuple(-c for c in simples[i])]] = tuple(
                tuple(row) for row in low
            )
            mats[sc.root_index[simples[i]]] = tuple(tuple(row) for row in up)
        for j in range(2):
            mats[j] = tuple(
                tuple(
                    Fraction(sum(weights[i][t] * rs.cartan[t][j] for t in range(2)))
                    if i == jj
                    else Fraction(0)
                    for jj in range(7)
                )
                for i in range(7)
            )
        # extend to the full basis with extraspecial decompositions
        order = sorted(rs.positive_roots, key=lambda b: (sum(b), b))
        for gamma in order:
            if sum(gamma) < 2:
                continue
            for eps in order:
                rest = tuple(x - y for x, y in zip(gamma, eps))
                if rs.is_root(rest) and sum(rest) > 0:
                    break
            n = sc.n_table[(eps, rest)]
            ig, ie, ir = (
                sc.root_index[gamma],
                sc.root_index[eps],
                sc.root_index[rest],
            )
            if ie not in mats or ir not in mats:
                return None
            mats[ig] = _matscale(Fraction(1, n), _commutator(mats[ie], mats[ir]))
            nge, nre = tuple(-c for c in eps), tuple(-c for c in rest)
            nn = sc.n_table[(nge, nre)]
            mats[sc.root_index[tuple(-c for c in gamma)]] = _matscale(
                Fraction(1, nn),
                _commutator(mats[sc.root_index[nge]], mats[sc.root_index[nre]]),
            )
        # homomorphism check on every basis pair
        zero = tuple(tuple(Fraction(0) for _ in range(7)) for _ in range(7))
        for a in range(sc.dim):
            for b in range(sc.dim):
                expect = zero
                for k, coeff in sc.basis_bracket(a, b):
                    expect = _matadd(expect, _matscale(Fraction(coeff), mats[k]))
                if _commutator(mats[a], mats[b]) != expect:
                    return None
        return mats

    from itertools import product

    for signs in product((1, -1), repeat=len(slots)):
        mats = build(signs)
        if mats is not None:
            return mats
    raise AssertionError("no consistent sign assignment for the V7 matrices")


def g2_rep_matrix(element: dict):
    """Matrix of a g2 element (Chevalley coordinates) on V7."""
    mats = g2_seven_dim_rep()
    out = [[Fraction(0)] * 7 for _ in range(7)]
    for k, c in element.items():
        m = mats[k]
        for i in range(7):
            for j in range(7):
                if m[i][j]:
                    out[i][j] += c * m[i][j]
    return tuple(tuple(row) for row in out)


def _g2_xi_element(xi) -> dict:
    from .rootdata import LieType, build_root_system

    rs = build_root_system(LieType("G", 2))
    sc = structure_constants(rs)
    directions = ((0, -1), (-1, -1), (-2, -1), (-3, -1))
    out = {}
    for c, beta in zip(xi, directions):
        c = Fraction(c)
        if c:
            out[sc.root_index[beta]] = c
    return out


def g2_yukawa_matrix(xi):
    """The 2x2 matrix of xi^2 : V^{2,0} -> V^{0,2} on the weight basis.

    Entries depend on the basis normalization; only the vanishing locus and
    rank are normalization-independent.
    """
    m = g2_rep_matrix(_g2_xi_element(xi))
    sq = _matmul(m, m)
    top = [0, 1]  # weights (2,1), (1,1): E-eigenvalue +1
    bottom = [5, 6]  # weights (-1,-1), (-2,-1): E-eigenvalue -1
    return tuple(tuple(sq[i][j] for j in top) for i in bottom)


def g2_second_fundamental_form(xi) -> dict:
    """(ad xi)^2 applied to the highest root vector; lands in g^0."""
    from .rootdata import LieType, build_root_system

    rs = build_root_system(LieType("G", 2))
    sc = structure_constants(rs)
    el = _g2_xi_element(xi)
    v = sc.x(rs.highest_root)
    out = sc.bracket(el, sc.bracket(el, v))
    for k in out:
        if k >= rs.rank:
            alpha = sc.basis_roots[k - rs.rank]
            if evaluate(alpha, (0, 1)) != 0:
                raise AssertionError("second fundamental form left g^0")
    return out


def g2_cubic_cone_point(t):
    """exp(t ad x^{-alpha_1}) x^{-alpha_2} as coefficients in g^{-1}.

    ad x^{-alpha_1} is nilpotent on g^{-1}, so the exponential is the exact
    polynomial sum; the resulting curve sweeps out the twisted cubic C_o.
    """
    from .rootdata import LieType, build_root_system

    rs = build_root_system(LieType("G", 2))
    sc = structure_constants(rs)
    t = Fraction(t)
    lower = sc.x((-1, 0))
    cur = sc.x((0, -1))
    total = dict(cur)
    fact = 1
    for k in range(1, 4):
        cur = sc.bracket(lower, cur)
        fact *= k
        for idx, c in cur.items():
            total[idx] = total.get(idx, 0) + c * t**k / fact
    directions = ((0, -1), (-1, -1), (-2, -1), (-3, -1))
    return tuple(total.get(sc.root_index[b], Fraction(0)) for b in directions)
