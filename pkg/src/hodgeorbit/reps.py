"""Weights, dimensions, weight multiplicities and embedding degrees.

Everything is exact: weights carry ``Fraction`` coordinates, dimensions and
degrees are arbitrary-precision integers.  The Freudenthal recursion walks the
weight lattice downward from the highest weight; its output is checked against
the Weyl dimension formula on every call.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionCapExceeded, NotDominant
from .grading import evaluate
from .rootdata import RootSystem

DEFAULT_DIM_CAP = 10**6
_DIM_CAP_ENV = "HODGEORBIT_DIM_CAP"


def dimension_cap() -> int:
    value = os.environ.get(_DIM_CAP_ENV)
    return int(value) if value else DEFAULT_DIM_CAP


@dataclass(frozen=True)
class Weight:
    """A weight in both the fundamental-weight and simple-root bases."""

    fund_coords: tuple
    root_coords: tuple

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fund_coords)

    @property
    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.fund_coords)


def _inverse_cartan(rs: RootSystem):
    n = rs.rank
    aug = [
        [Fraction(rs.cartan[i][j]) for j in range(n)]
        + [Fraction(1 if j == i else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


_INV_CACHE: dict = {}


def inverse_cartan(rs: RootSystem):
    key = rs.lie_type
    if key not in _INV_CACHE:
        _INV_CACHE[key] = _inverse_cartan(rs)
    return _INV_CACHE[key]


def weight_from_fund(rs: RootSystem, fund) -> Weight:
    fund = tuple(Fraction(c) for c in fund)
    inv = inverse_cartan(rs)
    root = tuple(
        sum(fund[i] * inv[i][k] for i in range(rs.rank)) for k in range(rs.rank)
    )
    return Weight(fund, root)


def weight_from_root(rs: RootSystem, root) -> Weight:
    root = tuple(Fraction(c) for c in root)
    fund = tuple(
        sum(root[i] * rs.cartan[i][j] for i in range(rs.rank))
        for j in range(rs.rank)
    )
    return Weight(fund, root)


def fundamental_weights(rs: RootSystem) -> list[Weight]:
    """The w_i, satisfying w_i(H^{alpha_j}) = delta_ij exactly."""
    out = []
    for i in range(rs.rank):
        w = weight_from_fund(rs, tuple(1 if j == i else 0 for j in range(rs.rank)))
        out.append(w)
    return out


def rho(rs: RootSystem) -> Weight:
    return weight_from_fund(rs, (1,) * rs.rank)


def dual_weight(rs: RootSystem, lam: Weight) -> Weight:
    """Highest weight of the dual representation: -w_0(lam)."""
    coords = tuple(-c for c in lam.root_coords)
    return weight_from_root(rs, _make_dominant(rs, coords))


def _make_dominant(rs: RootSystem, root_coords):
    """Dominant Weyl-chamber representative of a weight (root coordinates)."""
    cur = list(root_coords)
    while True:
        fund = [
            sum(cur[i] * rs.cartan[i][j] for i in range(rs.rank))
            for j in range(rs.rank)
        ]
        j = next((j for j in range(rs.rank) if fund[j] < 0), None)
        if j is None:
            return tuple(cur)
        cur[j] -= fund[j]


def _check_dominant_integral(lam: Weight):
    if not (lam.is_dominant and lam.is_integral):
        raise NotDominant(f"{lam.fund_coords} is not dominant integral")


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """dim V_lam = prod_{alpha>0} (lam+rho, alpha) / (rho, alpha)."""
    _check_dominant_integral(lam)
    rho_c = rho(rs).root_coords
    lam_rho = tuple(a + b for a, b in zip(lam.root_coords, rho_c))
    num = Fraction(1)
    for alpha in rs.positive_roots:
        num *= Fraction(rs.bilinear(lam_rho, alpha), rs.bilinear(rho_c, alpha))
    if num.denominator != 1:
        raise AssertionError("Weyl dimension is not an integer")
    return int(num)


def weights_with_E_value_one(rs: RootSystem, E) -> list[Weight]:
    """All dominant integral lam with lam(E) = 1, for E = sum_{i in I} S^i.

    Each returned lam also satisfies lam*(E) = 1, which is asserted.
    """
    fw = fundamental_weights(rs)
    values = [evaluate(w.root_coords, E) for w in fw]
    if any(v <= 0 for v in values):
        raise AssertionError("E must be a sum of S^i over a nonempty index set")
    found = []

    def search(idx, fund, total):
        if idx == rs.rank:
            if total == 1:
                found.append(weight_from_fund(rs, tuple(fund)))
            return
        c = 0
        while total + c * values[idx] <= 1:
            search(idx + 1, fund + [c], total + c * values[idx])
            c += 1

    search(0, [], Fraction(0))
    for lam in found:
        star = dual_weight(rs, lam)
        if evaluate(star.root_coords, E) != 1:
            raise AssertionError("dual weight fails lam*(E) = 1")
    found.sort(key=lambda w: w.fund_coords)
    return found


@dataclass(frozen=True)
class WeightMultiset:
    """All weights of an irreducible module, with multiplicities."""

    highest: Weight
    entries: dict  # root-coordinate tuple -> multiplicity

    @property
    def total(self) -> int:
        return sum(self.entries.values())


def _weyl_orbit(rs: RootSystem, root_coords):
    """Orbit of a weight (root coordinates) under the Weyl group."""
    start = tuple(root_coords)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mu in frontier:
            fund = [
                sum(mu[i] * rs.cartan[i][j] for i in range(rs.rank))
                for j in range(rs.rank)
            ]
            for j in range(rs.rank):
                if fund[j] == 0:
                    continue
                alpha_j = tuple(1 if k == j else 0 for k in range(rs.rank))
                img = tuple(mu[k] - fund[j] * alpha_j[k] for k in range(rs.rank))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def freudenthal_multiplicities(rs: RootSystem, lam: Weight, cap=None) -> WeightMultiset:
    """Weight multiplicities of V_lam by the Freudenthal recursion.

    Weights are discovered by walking down from ``lam`` one simple root at a
    time; a candidate is kept when the recursion gives positive multiplicity.
    The grand total is checked against ``weyl_dimension`` before returning.
    """
    _check_dominant_integral(lam)
    cap = dimension_cap() if cap is None else cap
    dim = weyl_dimension(rs, lam)
    if dim > cap:
        raise DimensionCapExceeded(f"dim {dim} exceeds cap {cap}")

    rho_c = rho(rs).root_coords
    lam_c = lam.root_coords
    lam_rho = tuple(a + b for a, b in zip(lam_c, rho_c))
    norm_lam = rs.bilinear(lam_rho, lam_rho)
    mult = {lam_c: 1}
    level = [lam_c]
    simples = [tuple(1 if k == j else 0 for k in range(rs.rank)) for j in range(rs.rank)]
    while level:
        candidates = set()
        for mu in level:
            for a in simples:
                candidates.add(tuple(m - s for m, s in zip(mu, a)))
        nxt = []
        for mu in sorted(candidates):
            if mu in mult:
                continue
            acc = Fraction(0)
            for alpha in rs.positive_roots:
                k = 1
                while True:
                    up = tuple(m + k * a for m, a in zip(mu, alpha))
                    # walk the whole cone below lambda: candidates need not be
                    # weights, so their strings may have gaps
                    if any(l - u < 0 for l, u in zip(lam_c, up)):
                        break
                    m_up = mult.get(up, 0)
                    if m_up:
                        acc += 2 * m_up * rs.bilinear(up, alpha)
                    k += 1
            mu_rho = tuple(m + r for m, r in zip(mu, rho_c))
            denom = norm_lam - rs.bilinear(mu_rho, mu_rho)
            if denom == 0 or acc == 0:
                continue
            m_mu = acc / denom
            if m_mu.denominator != 1:
                raise AssertionError("Freudenthal produced a non-integer multiplicity")
            m_mu = int(m_mu)
            if m_mu < 0:
                raise AssertionError("negative multiplicity")
            if m_mu > 0:
                mult[mu] = m_mu
                nxt.append(mu)
        level = nxt
    ms = WeightMultiset(lam, mult)
    if ms.total != dim:
        raise AssertionError(
            f"multiplicities sum to {ms.total}, Weyl dimension is {dim}"
        )
    return ms


def rep_hodge_numbers(rs: RootSystem, lam: Weight, E, cap=None) -> dict:
    """Dimensions of the E-eigenspaces of V_lam, keyed by eigenvalue."""
    ms = freudenthal_multiplicities(rs, lam, cap=cap)
    out: dict = {}
    for mu, m in ms.entries.items():
        q = evaluate(mu, E)
        q = int(q) if Fraction(q).denominator == 1 else q
        out[q] = out.get(q, 0) + m
    return out


def _degree_by_product(rs: RootSystem, mu: Weight) -> tuple[int, int]:
    rho_c = rho(rs).root_coords
    support = [a for a in rs.positive_roots if rs.bilinear(mu.root_coords, a) != 0]
    n = len(support)
    deg = Fraction(math.factorial(n))
    for alpha in support:
        deg *= Fraction(rs.bilinear(mu.root_coords, alpha), rs.bilinear(rho_c, alpha))
    if deg.denominator != 1:
        raise AssertionError("degree is not an integer")
    return n, int(deg)


def _degree_by_hilbert_fit(rs: RootSystem, mu: Weight, n: int) -> int:
    """n-th finite difference of k -> dim V_{k mu}, i.e. n! * leading coeff."""
    values = []
    for k in range(n + 1):
        lam = weight_from_fund(rs, tuple(k * c for c in mu.fund_coords))
        values.append(weyl_dimension(rs, lam))
    for _ in range(n):
        values = [b - a for a, b in zip(values, values[1:])]
    return values[0]


def embedding_degree_for_weight(rs: RootSystem, mu: Weight):
    """(n, d) for the orbit of the highest weight line of V_mu in P(V_mu).

    The closed product formula and the Hilbert-polynomial fit are both
    evaluated; any disagreement is a hard error.
    """
    _check_dominant_integral(mu)
    n, d = _degree_by_product(rs, mu)
    d_fit = _degree_by_hilbert_fit(rs, mu, n)
    if d != d_fit:
        raise AssertionError(f"degree mismatch: product {d} vs Hilbert fit {d_fit}")
    return n, d


_DEGREE_CACHE: dict = {}


def embedding_degree(rs: RootSystem, I) -> tuple[int, int, int]:
    """(n, d, N) for the minimal embedding of G/P_I, mu = sum_{i in I} w_i."""
    key = (rs.lie_type, frozenset(I))
    if key in _DEGREE_CACHE:
        return _DEGREE_CACHE[key]
    fund = tuple(1 if j + 1 in set(I) else 0 for j in range(rs.rank))
    mu = weight_from_fund(rs, fund)
    n, d = embedding_degree_for_weight(rs, mu)
    N = weyl_dimension(rs, mu) - 1
    _DEGREE_CACHE[key] = (n, d, N)
    return n, d, N
