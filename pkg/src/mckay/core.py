"""McKay quivers, classical and generalized Cartan matrices, the kappa map and C^-1."""
from __future__ import annotations

from dataclasses import dataclass

from . import ade
from .errors import InvariantViolation, SemanticError
from .exact import RationalMatrix, mat_inverse
from .groups import GroupData, alternating_lambda, decompose, is_free

__all__ = [
    "McKayQuiver",
    "CartanBundle",
    "KappaReport",
    "adjacency",
    "classical_cartan",
    "generalized_cartan",
    "cartan",
    "ade_classify",
    "kappa_matrix",
    "kappa_report",
    "pairing_matrix",
    "quiver_dot",
]


@dataclass(frozen=True)
class McKayQuiver:
    """``arrows[i][j]`` = a_ij = <chi_i chi_Q, chi_j>; ``coarrows`` uses Lambda^2 Q (n = 3)."""

    dims: tuple[int, ...]
    arrows: tuple[tuple[int, ...], ...]
    coarrows: tuple[tuple[int, ...], ...] | None = None

    @property
    def num_vertices(self) -> int:
        return len(self.dims)

    def arrow_matrix(self) -> RationalMatrix:
        return RationalMatrix.from_rows(self.arrows)

    def coarrow_matrix(self) -> RationalMatrix:
        if self.coarrows is None:
            raise ValueError("quiver has no coarrows")
        return RationalMatrix.from_rows(self.coarrows)


@dataclass(frozen=True)
class CartanBundle:
    extended: RationalMatrix
    reduced: RationalMatrix
    inverse: RationalMatrix
    mode: str  # "classical-n2" or "generalized-n3"


def adjacency(G: GroupData) -> McKayQuiver:
    chars = G.characters()
    arrows = tuple(tuple(decompose(chi * G.q_char, G)) for chi in chars)
    coarrows = None
    if G.embedding_dim == 3:
        lam2 = G.lambda_char(2)
        coarrows = tuple(tuple(decompose(chi * lam2, G)) for chi in chars)
    return McKayQuiver(G.dims, arrows, coarrows)


def _bundle(extended: RationalMatrix, mode: str) -> CartanBundle:
    reduced = extended.minor(0, 0)
    try:
        inverse = mat_inverse(reduced)
    except SemanticError:
        raise InvariantViolation("singular Cartan matrix") from None
    if inverse @ reduced != RationalMatrix.identity(reduced.rows):
        raise InvariantViolation("Cartan inverse failed to multiply back to the identity")
    return CartanBundle(extended, reduced, inverse, mode)


def classical_cartan(G: GroupData, quiver: McKayQuiver | None = None) -> CartanBundle:
    """Extended Cartan matrix 2I - A of a finite subgroup of SL(2, C)."""
    if G.embedding_dim != 2:
        raise SemanticError("wrong dimension")
    q = quiver or adjacency(G)
    extended = RationalMatrix.identity(q.num_vertices) * 2 - q.arrow_matrix()
    return _bundle(extended, "classical-n2")


def _require_n3(G: GroupData) -> None:
    if G.embedding_dim != 3:
        raise SemanticError("wrong dimension")
    if not G.is_abelian:
        raise SemanticError("nonabelian unsupported")
    if not is_free(G):
        raise SemanticError("not free")


def generalized_cartan(G: GroupData, quiver: McKayQuiver | None = None) -> CartanBundle:
    """C~ = [a_ij - b_ij] for a free abelian subgroup of SL(3, C)."""
    _require_n3(G)
    q = quiver or adjacency(G)
    extended = q.arrow_matrix() - q.coarrow_matrix()
    return _bundle(extended, "generalized-n3")


def cartan(G: GroupData, quiver: McKayQuiver | None = None) -> CartanBundle:
    if G.embedding_dim == 2:
        return classical_cartan(G, quiver)
    return generalized_cartan(G, quiver)


def ade_classify(q: McKayQuiver) -> str:
    """ADE label (``"A4"``, ``"D6"``, ``"E8"``, ...) of an n = 2 McKay quiver."""
    if q.coarrows is not None:
        raise SemanticError("wrong dimension")
    label, _ = ade.classify_graph([list(r) for r in q.arrows])
    return label


@dataclass(frozen=True)
class KappaReport:
    """Matrix of multiplication by lambda = sum (-1)^i Lambda^i Q on R(G).

    Column k holds the image of the k-th source basis vector
    {R_reg, R_1, ..., R_r} in the target basis {R_0, R_1 - n_1 R_0, ...}.
    ``sign`` is the epsilon with lower block = epsilon * C.
    """

    matrix: RationalMatrix
    zero_border: bool
    sign: int | None

    @property
    def block_ok(self) -> bool:
        return self.zero_border and self.sign is not None


def kappa_matrix(G: GroupData) -> RationalMatrix:
    _require_n3(G)
    lam = alternating_lambda(G)  # = Lambda^2 Q - Q on SL(3)
    dims = G.dims
    size = G.num_irreps
    sources = [G.regular()] + [G.char(i) for i in range(1, size)]
    cols = []
    for src in sources:
        mult = decompose(src * lam, G)  # coefficients on R_0, ..., R_r
        # R_j = (R_j - n_j R_0) + n_j R_0
        head = mult[0] + sum(mult[j] * dims[j] for j in range(1, size))
        cols.append([head] + mult[1:])
    return RationalMatrix(size, size, [cols[k][j] for j in range(size) for k in range(size)])


def kappa_report(G: GroupData, bundle: CartanBundle | None = None) -> KappaReport:
    K = kappa_matrix(G)
    C = (bundle or generalized_cartan(G)).reduced
    size = K.rows
    border = all(K[0, j] == 0 for j in range(size)) and all(K[i, 0] == 0 for i in range(size))
    block = K.minor(0, 0)
    sign = None
    if block == C:
        sign = 1
    elif block == -C:
        sign = -1
    return KappaReport(K, border, sign)


def pairing_matrix(G: GroupData, bundle: CartanBundle | None = None) -> RationalMatrix:
    """C^-1: the predicted matrix of pairings of (ch R_i - rk)(ch R_j^* - rk).

    For n = 2 this is the inverse of the classical Cartan matrix, whose
    negative is the intersection pairing of the first Chern classes.
    """
    return (bundle or cartan(G)).inverse


def quiver_dot(q: McKayQuiver, name: str = "mckay") -> str:
    """Graphviz digraph; one edge per unit of multiplicity, coarrows dashed."""
    lines = [f'digraph "{name}" {{']
    for i, d in enumerate(q.dims):
        lines.append(f'  {i} [label="R{i} (dim {d})"];')
    for i, row in enumerate(q.arrows):
        for j, m in enumerate(row):
            for _ in range(m):
                lines.append(f"  {i} -> {j};")
    if q.coarrows is not None:
        for i, row in enumerate(q.coarrows):
            for j, m in enumerate(row):
                for _ in range(m):
                    lines.append(f"  {i} -> {j} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"

