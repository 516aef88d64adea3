"""Grading-element decompositions, parabolic data and root compactness."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IndexOutOfRange
from .rootdata import RootSystem

GradingElement = tuple[int, ...]


def grading_element_for(rs: RootSystem, I) -> GradingElement:
    """E = sum_{i in I} S^i as an integer vector in the S-basis."""
    I = _check_index_set(rs, I)
    return tuple(1 if j + 1 in I else 0 for j in range(rs.rank))


def evaluate(coords, element) -> object:
    """Value of the grading element on a vector in simple-root coordinates."""
    return sum(c * e for c, e in zip(coords, element))


def _check_index_set(rs: RootSystem, I) -> frozenset:
    I = frozenset(I)
    if not I:
        raise IndexOutOfRange("index set must be nonempty")
    for i in I:
        if not 1 <= i <= rs.rank:
            raise IndexOutOfRange(f"index {i} outside 1..{rs.rank}")
    return I


@dataclass(frozen=True)
class ParabolicData:
    """Eigenspace dimensions of the grading E = sum_{i in I} S^i."""

    index_set: frozenset
    grading_element: GradingElement
    eigen_dims: dict = field(compare=False)
    cartan_part: int
    zero_root_part: int
    flag_dim: int


def parabolic(rs: RootSystem, I) -> ParabolicData:
    """Dimensions of the g^p and of the flag variety G/P_I."""
    I = _check_index_set(rs, I)
    E = grading_element_for(rs, I)
    dims: dict[int, int] = {}
    for beta in rs.positive_roots:
        p = evaluate(beta, E)
        dims[p] = dims.get(p, 0) + 1
        dims[-p] = dims.get(-p, 0) + 1
    zero_root_part = dims.get(0, 0)
    dims[0] = zero_root_part + rs.rank
    flag_dim = sum(v for p, v in dims.items() if p > 0)
    if sum(dims.values()) != rs.dimension:
        raise AssertionError("eigenspace dimensions do not sum to dim g")
    return ParabolicData(I, E, dims, rs.rank, zero_root_part, flag_dim)


def adjoint_index_set(rs: RootSystem) -> frozenset:
    """I(p) for the adjoint variety: the i with highest_root - alpha_i a root."""
    at = rs.highest_root
    out = set()
    for i in range(rs.rank):
        cand = tuple(at[k] - (1 if k == i else 0) for k in range(rs.rank))
        if rs.is_root(cand):
            out.add(i + 1)
    return frozenset(out)


def is_fundamental_adjoint(rs: RootSystem, I) -> bool:
    """True when I = {i} and the highest root equals the fundamental weight w_i."""
    I = _check_index_set(rs, I)
    if len(I) != 1:
        return False
    (i,) = I
    # highest_root = w_i means its simple-coroot pairings are delta_{i.}
    fund = tuple(
        sum(rs.highest_root[k] * rs.cartan[k][j] for k in range(rs.rank))
        for j in range(rs.rank)
    )
    if fund != tuple(1 if j + 1 == i else 0 for j in range(rs.rank)):
        return False
    # the defining property: highest_root - alpha_j is a root iff j = i
    if adjoint_index_set(rs) != I:
        raise AssertionError("fundamental adjoint property violated")
    return True


def classify_root_compactness(rs: RootSystem, E: GradingElement):
    """Split the roots by parity of alpha(E): (compact, noncompact)."""
    compact, noncompact = [], []
    for beta in rs.positive_roots:
        neg = tuple(-c for c in beta)
        if evaluate(beta, E) % 2:
            noncompact += [beta, neg]
        else:
            compact += [beta, neg]
    return tuple(compact), tuple(noncompact)


def schubert_dim_from_grading(rs: RootSystem, i: int, T_w) -> int:
    """#{alpha in Delta : alpha(S^i) = 1 and alpha(T_w) <= 0}."""
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRange(f"index {i} outside 1..{rs.rank}")
    count = 0
    # alpha(S^i) is the i-th simple-root coordinate
    for beta in rs.positive_roots:
        for alpha in (beta, tuple(-c for c in beta)):
            if alpha[i - 1] == 1 and evaluate(alpha, T_w) <= 0:
                count += 1
    return count
