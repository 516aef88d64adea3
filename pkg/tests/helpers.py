"""Independent oracles used to cross-check the library implementations.

Everything here is deliberately written against the definitions rather than
reusing the library's algorithms: weight multiplicities come from the Weyl
character formula with an explicit Kostant partition count, Weyl groups are
enumerated as orbits of a strictly dominant vector.
"""

from fractions import Fraction

from hodgeorbit.reps import rho, weight_from_fund
from hodgeorbit.rootdata import RootSystem


def weyl_orbit_with_signs(rs: RootSystem, start):
    """Orbit of a strictly dominant vector, as {vector: det(w)}.

    Any path of simple reflections to a point has the parity of the group
    element carrying the base point there, so BFS parities are well-defined.
    """
    start = tuple(start)
    out = {start: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for vec in frontier:
            sign = out[vec]
            for j in range(rs.rank):
                pair = sum(vec[t] * rs.cartan[t][j] for t in range(rs.rank))
                if pair == 0:
                    continue
                img = tuple(
                    vec[m] - pair * (1 if m == j else 0) for m in range(rs.rank)
                )
                if img not in out:
                    out[img] = -sign
                    nxt.append(img)
        frontier = nxt
    return out


class KostantPartition:
    """Number of ways to write a vector as a nonneg combination of Delta+."""

    def __init__(self, rs: RootSystem):
        self.roots = rs.positive_roots
        self.memo = {}

    def count(self, vec):
        vec = tuple(vec)
        if any(Fraction(c).denominator != 1 for c in vec):
            return 0
        vec = tuple(int(c) for c in vec)
        if any(c < 0 for c in vec):
            return 0
        return self._count(vec, len(self.roots) - 1)

    def _count(self, vec, idx):
        if all(c == 0 for c in vec):
            return 1
        if idx < 0:
            return 0
        key = (vec, idx)
        if key in self.memo:
            return self.memo[key]
        total = 0
        cur = vec
        root = self.roots[idx]
        while all(c >= 0 for c in cur):
            total += self._count(cur, idx - 1)
            cur = tuple(a - b for a, b in zip(cur, root))
        self.memo[key] = total
        return total


def multiplicity_by_weyl_character(rs: RootSystem, lam, mu, orbit=None, kostant=None):
    """m_mu(V_lam) = sum_w det(w) P(w(lam+rho) - (mu+rho))."""
    rho_c = rho(rs).root_coords
    lam_rho = tuple(a + b for a, b in zip(lam.root_coords, rho_c))
    mu_rho = tuple(a + b for a, b in zip(mu, rho_c))
    if orbit is None:
        orbit = weyl_orbit_with_signs(rs, lam_rho)
    if kostant is None:
        kostant = KostantPartition(rs)
    total = 0
    for vec, sign in orbit.items():
        total += sign * kostant.count(tuple(a - b for a, b in zip(vec, mu_rho)))
    return total


def dominant_weights_with_dim_at_most(rs: RootSystem, bound):
    """All dominant integral weights of dimension <= bound.

    DFS over fundamental coordinates; the dimension is strictly monotone in
    each coordinate, so a branch is abandoned as soon as the zero-padded
    prefix already exceeds the bound.
    """
    from hodgeorbit.reps import weyl_dimension

    found = []

    def dim_of(prefix):
        lam = weight_from_fund(rs, tuple(prefix) + (0,) * (rs.rank - len(prefix)))
        return weyl_dimension(rs, lam), lam

    def extend(prefix):
        if len(prefix) == rs.rank:
            found.append(dim_of(prefix)[1])
            return
        c = 0
        while dim_of(prefix + [c])[0] <= bound:
            extend(prefix + [c])
            c += 1

    extend([])
    return found
