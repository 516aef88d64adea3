"""The variety of lines through a point of a minimally embedded G/P.

The homogeneous description of C_o (subdiagram plus marked nodes) follows the
adjacency rule for maximal parabolics; membership of a root direction x^{-beta}
is decided by the string-length criterion

    mu(H^beta) <= 1,

which is equivalent to xi^2(v) = 0 for xi = x^{-beta} and v a highest weight
vector: v spans an sl2^beta-string of length mu(H^beta) + 1 (mu + beta is
never a weight), so x^{-beta} applied twice kills v exactly when that string
has at most two steps.  This derived criterion is cross-validated against
explicit matrix computations for G2 and B3 in the chevalley tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotDegreeOne, NotMaximalParabolic
from .grading import evaluate, grading_element_for
from .reps import weight_from_fund
from .rootdata import LieType, RootSystem, build_root_system, coroot_pairing

#: classical names for the C_o of the fundamental adjoint varieties
CO_CLASSICAL_NAMES = {
    ("B", 2): "P1 x Q^(n-6)",
    ("D", 2): "P1 x Q^(n-6)",
    ("E6", 2): "Gr(3,C6)",
    ("E7", 1): "S6",
    ("E8", 8): "E7/P7",
    ("F4", 1): "LG(3,C6)",
    ("G2", 2): "v3(P1)",
}


def _component_split(rs: RootSystem, nodes):
    """Connected components of the sub-diagram on ``nodes`` (1-based)."""
    nodes = sorted(nodes)
    seen, comps = set(), []
    for start in nodes:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in nodes:
                if w not in seen and rs.cartan[v - 1][w - 1] != 0:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _classify_component(rs: RootSystem, comp) -> LieType:
    """Lie type of a connected sub-diagram, by Cartan-matrix isomorphism."""
    n = len(comp)
    sub = [[rs.cartan[a - 1][b - 1] for b in comp] for a in comp]
    # low-rank coincidences (D3 = A3, D2 = A1+A1 never arises connected)
    # are reported under the first matching family in ABCDEFG order
    for family in "ABCDEFG":
        try:
            cand = LieType(family, n)
        except Exception:
            continue
        target = build_root_system(cand).cartan
        if _cartan_isomorphic(sub, [list(row) for row in target]):
            return cand
    raise AssertionError(f"unclassifiable sub-diagram {comp}")


def _cartan_isomorphic(a, b) -> bool:
    n = len(a)
    if len(b) != n:
        return False

    def profile(m, i):
        return tuple(sorted(m[i][j] for j in range(n) if j != i))

    pa = [profile(a, i) for i in range(n)]
    pb = [profile(b, i) for i in range(n)]
    if sorted(pa) != sorted(pb):
        return False
    assignment = [None] * n

    def backtrack(i, used):
        if i == n:
            return True
        for j in range(n):
            if j in used or pa[i] != pb[j]:
                continue
            if any(
                assignment[k] is not None
                and (a[i][k] != b[j][assignment[k]] or a[k][i] != b[assignment[k]][j])
                for k in range(i)
            ):
                continue
            assignment[i] = j
            if backtrack(i + 1, used | {j}):
                return True
            assignment[i] = None
        return False

    return backtrack(0, set())


@dataclass(frozen=True)
class FlagDescriptor:
    """Homogeneous data of one component of C_o."""

    subdiagram: tuple  # LieType components of the diagram minus deleted nodes
    marked_nodes: frozenset  # indices in the original diagram
    dimension: int
    classical_name: str | None = None


def _check_single(rs: RootSystem, I) -> int:
    I = set(I)
    if len(I) != 1:
        raise NotMaximalParabolic(f"index set {sorted(I)} is not a single node")
    (i,) = I
    if not 1 <= i <= rs.rank:
        raise NotMaximalParabolic(f"node {i} outside 1..{rs.rank}")
    return i


def lines_parabolic(rs: RootSystem, I) -> frozenset:
    """I(q): the nodes adjacent to alpha_i in the Dynkin diagram."""
    i = _check_single(rs, I)
    return frozenset(
        j + 1 for j in range(rs.rank) if j + 1 != i and rs.cartan[i - 1][j] != 0
    )


def _descriptor_for(rs: RootSystem, i: int, deleted) -> FlagDescriptor:
    keep = [j for j in range(1, rs.rank + 1) if j not in deleted]
    marked = frozenset(
        j for j in keep if rs.cartan[i - 1][j - 1] != 0 and j != i
    )
    comps = _component_split(rs, keep)
    types = tuple(
        sorted((_classify_component(rs, c) for c in comps), key=str)
    )
    # dimension: positive roots of the sub-system with nonzero value on the
    # marked grading element; sub-system roots = roots supported on `keep`
    dim = 0
    for beta in rs.positive_roots:
        if any(beta[j - 1] for j in deleted):
            continue
        if any(beta[j - 1] for j in marked):
            dim += 1
    name = None
    fam = rs.lie_type.family
    if fam in "BD":
        name = CO_CLASSICAL_NAMES.get((fam, i))
    else:
        name = CO_CLASSICAL_NAMES.get((str(rs.lie_type), i))
    return FlagDescriptor(types, marked, dim, name)


def co_descriptor(rs: RootSystem, I) -> FlagDescriptor:
    """C_o = G^0/(G^0 cap Q) for a maximal parabolic: diagram minus node i."""
    i = _check_single(rs, I)
    return _descriptor_for(rs, i, {i})


def co_components(rs: RootSystem, I) -> list[FlagDescriptor]:
    """General I: C_o is the disjoint union of one component per i in I."""
    I = sorted(set(I))
    if not I:
        raise NotMaximalParabolic("index set must be nonempty")
    return [_descriptor_for(rs, i, set(I)) for i in I]


def cone_horizontal(rs: RootSystem, I) -> bool:
    """The swept cone X is horizontal iff alpha_i is not short."""
    i = _check_single(rs, I)
    alpha_i = tuple(1 if k == i - 1 else 0 for k in range(rs.rank))
    return rs.root_length(alpha_i) == max(rs.lengths)


def co_membership_root_direction(rs: RootSystem, I, beta) -> bool:
    """Whether x^{-beta} is tangent to a line of C_o, for beta(E) = 1."""
    I = sorted(set(I))
    beta = rs.check_root(beta)
    E = grading_element_for(rs, I)
    if evaluate(beta, E) != 1:
        raise NotDegreeOne(f"{beta} has E-value {evaluate(beta, E)}, need 1")
    mu = weight_from_fund(
        rs, tuple(1 if j + 1 in set(I) else 0 for j in range(rs.rank))
    )
    return coroot_pairing(rs, mu.root_coords, beta) <= 1
