"""Finite-group character data: cyclic subgroups of SL(n, C) and bundled tables.

Everything here is character-level.  No matrix representation of a
nonabelian group is ever built; a :class:`GroupData` carries the class sizes,
power maps and the full character table, which is all the downstream formulas
consume.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import SemanticError, SpecSyntaxError
from .exact import CyclotomicNumber, cyc_dot, cyc_to_rational, format_cyc, parse_cyc, zeta

__all__ = [
    "GroupSpec",
    "ConjugacyClass",
    "Irrep",
    "GroupData",
    "VirtualCharacter",
    "build_cyclic",
    "build_group",
    "load_table",
    "parse_table",
    "format_table",
    "data_dir",
    "resolve_table",
    "inner_product",
    "exterior_power_char",
    "is_free",
    "decompose",
    "free_weight_triples",
]

_ONE = CyclotomicNumber.from_rational(1)


@dataclass(frozen=True)
class GroupSpec:
    """How to obtain a group: synthesize a cyclic one, or read a table file."""

    kind: str
    n: int | None = None
    r: int | None = None
    weights: tuple[int, ...] | None = None
    path: str | None = None

    def __post_init__(self):
        if self.kind not in ("cyclic", "table"):
            raise SpecSyntaxError(f"unknown group kind {self.kind!r}")
        if self.kind == "cyclic":
            if self.n is None or self.r is None or self.weights is None:
                raise SpecSyntaxError("cyclic spec needs n, r and weights")
            if len(self.weights) != self.n:
                raise SpecSyntaxError(f"expected {self.n} weights, got {len(self.weights)}")
        elif self.path is None:
            raise SpecSyntaxError("table spec needs a path")

    @classmethod
    def cyclic(cls, r: int, weights: Sequence[int]) -> GroupSpec:
        return cls("cyclic", n=len(weights), r=r, weights=tuple(weights))


@dataclass(frozen=True)
class ConjugacyClass:
    label: str
    size: int
    element_order: int


@dataclass(frozen=True)
class Irrep:
    index: int
    dim: int
    values: tuple[CyclotomicNumber, ...]


class VirtualCharacter:
    """A class function with cyclotomic values, one per conjugacy class."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[CyclotomicNumber | int | Fraction]):
        self.values = tuple(v if isinstance(v, CyclotomicNumber) else CyclotomicNumber.from_rational(v)
                            for v in values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, c: int) -> CyclotomicNumber:
        return self.values[c]

    def _check(self, other: VirtualCharacter) -> None:
        if len(other) != len(self):
            raise ValueError("class functions have different lengths")

    def __add__(self, other: VirtualCharacter) -> VirtualCharacter:
        self._check(other)
        return VirtualCharacter(a + b for a, b in zip(self.values, other.values))

    def __sub__(self, other: VirtualCharacter) -> VirtualCharacter:
        self._check(other)
        return VirtualCharacter(a - b for a, b in zip(self.values, other.values))

    def __neg__(self) -> VirtualCharacter:
        return VirtualCharacter(-a for a in self.values)

    def __mul__(self, other) -> VirtualCharacter:
        if isinstance(other, VirtualCharacter):
            self._check(other)
            return VirtualCharacter(a * b for a, b in zip(self.values, other.values))
        return VirtualCharacter(a * other for a in self.values)

    __rmul__ = __mul__

    def conj(self) -> VirtualCharacter:
        """Character of the dual representation."""
        return VirtualCharacter(a.conjugate() for a in self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "VirtualCharacter(" + ", ".join(format_cyc(v) for v in self.values) + ")"


@dataclass(frozen=True, eq=False)
class GroupData:
    """Validated character data of a finite subgroup G of SL(n, C).

    ``power_maps[k][c]`` is the class of g**k for g in class c, for k = 1..n.
    Irrep 0 is the trivial representation and class 0 the identity.
    ``weights`` is set only for synthesized cyclic groups (generator
    diag(zeta_r**a_1, ..., zeta_r**a_n)).
    """

    name: str
    order: int
    conductor: int
    embedding_dim: int
    classes: tuple[ConjugacyClass, ...]
    power_maps: dict[int, tuple[int, ...]]
    irreps: tuple[Irrep, ...]
    q_char: VirtualCharacter
    weights: tuple[int, ...] | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.embedding_dim

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def num_irreps(self) -> int:
        return len(self.irreps)

    @property
    def dims(self) -> tuple[int, ...]:
        if "dims" not in self._cache:
            self._cache["dims"] = tuple(ir.dim for ir in self.irreps)
        return self._cache["dims"]

    @property
    def class_sizes(self) -> tuple[int, ...]:
        if "sizes" not in self._cache:
            self._cache["sizes"] = tuple(c.size for c in self.classes)
        return self._cache["sizes"]

    @property
    def is_abelian(self) -> bool:
        return all(c.size == 1 for c in self.classes)

    @property
    def is_cyclic(self) -> bool:
        return self.weights is not None

    def char(self, i: int) -> VirtualCharacter:
        key = ("char", i)
        if key not in self._cache:
            self._cache[key] = VirtualCharacter(self.irreps[i].values)
        return self._cache[key]

    def characters(self) -> list[VirtualCharacter]:
        return [self.char(i) for i in range(self.num_irreps)]

    def trivial(self) -> VirtualCharacter:
        return VirtualCharacter([_ONE] * self.num_classes)

    def regular(self) -> VirtualCharacter:
        return VirtualCharacter([self.order] + [0] * (self.num_classes - 1))

    def lambda_char(self, k: int) -> VirtualCharacter:
        """Character of the k-th exterior power of the defining representation."""
        key = ("lambda", k)
        if key not in self._cache:
            self._cache[key] = exterior_power_char(self.q_char, k, self)
        return self._cache[key]


# ---------------------------------------------------------------------------
# construction


def build_cyclic(spec: GroupSpec) -> GroupData:
    """Cyclic group generated by diag(zeta_r**a_1, ..., zeta_r**a_n)."""
    if spec.kind != "cyclic":
        raise ValueError("build_cyclic needs a cyclic spec")
    n, r = spec.n, spec.r
    if r < 2:
        raise SemanticError("group order r must be at least 2")
    if n < 2:
        raise SemanticError("embedding dimension n must be at least 2")
    weights = tuple(a % r for a in spec.weights)
    if sum(weights) % r:
        raise SemanticError("not in SL")
    roots = [zeta(r, k) for k in range(r)]
    classes = tuple(
        ConjugacyClass(f"g^{k}", 1, r // math.gcd(r, k)) for k in range(r)
    )
    irreps = tuple(
        Irrep(j, 1, tuple(roots[(j * k) % r] for k in range(r))) for j in range(r)
    )
    q = VirtualCharacter(
        sum((roots[(a * k) % r] for a in weights), CyclotomicNumber.from_rational(0, r))
        for k in range(r)
    )
    power_maps = {k: tuple((k * c) % r for c in range(r)) for k in range(1, n + 1)}
    name = f"Z{r}(" + ",".join(str(a) for a in weights) + ")"
    return GroupData(name, r, r, n, classes, power_maps, irreps, q, weights)


def build_group(spec: GroupSpec, base: str | os.PathLike | None = None) -> GroupData:
    if spec.kind == "cyclic":
        return build_cyclic(spec)
    return load_table(resolve_table(spec.path, base))


def data_dir() -> Path:
    """Bundled table directory, overridable with ``MCKAY_DATA``."""
    env = os.environ.get("MCKAY_DATA")
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def resolve_table(path: str, base: str | os.PathLike | None = None) -> Path:
    """Find a table file: as given, relative to ``base``, then in :func:`data_dir`."""
    p = Path(path)
    candidates = [p] if p.is_absolute() else [Path(base) / p] if base else []
    if not p.is_absolute():
        candidates += [p, data_dir() / p, data_dir() / p.name]
    for c in candidates:
        if c.is_file():
            return c
    raise SemanticError(f"table file not found: {path}")


def load_table(path: str | os.PathLike) -> GroupData:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SemanticError(f"cannot read table {path}: {exc.strerror}") from None
    return parse_table(text)


def _ints(tokens: list[str], line: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise SpecSyntaxError(f"expected integers in line: {line}") from None


def _keyed(tokens: list[str], keys: Sequence[str], line: str) -> dict[str, str]:
    """Parse ``key value key value ...`` with a fixed key order."""
    if len(tokens) != 2 * len(keys) or tokens[0::2] != list(keys):
        raise SpecSyntaxError(f"malformed line: {line}")
    return dict(zip(keys, tokens[1::2]))


def _split_values(rest: str) -> list[str]:
    """Split a values list on whitespace, keeping ``cyc(...)`` groups intact."""
    out, depth, cur = [], 0, []
    for ch in rest:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch.isspace() and depth == 0:
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if depth:
        raise SpecSyntaxError("unbalanced parentheses in values")
    if cur:
        out.append("".join(cur))
    return out


def parse_table(text: str) -> GroupData:
    """Parse and validate the line-oriented character-table format."""
    header = None
    classes: dict[int, ConjugacyClass] = {}
    power_maps: dict[int, tuple[int, ...]] = {}
    irreps: dict[int, tuple[int, list[CyclotomicNumber]]] = {}
    qchar = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "group":
            kv = _keyed(tokens[2:], ["order", "conductor", "classes", "irreps", "embedding_dim"], line)
            header = (tokens[1], *_ints(list(kv.values()), line))
        elif head == "class":
            idx = _ints(tokens[1:2], line)[0]
            kv = _keyed(tokens[2:], ["size", "element_order"], line)
            size, order = _ints(list(kv.values()), line)
            classes[idx] = ConjugacyClass(f"c{idx}", size, order)
        elif head == "powermap":
            nums = _ints(tokens[1:], line)
            power_maps[nums[0]] = tuple(nums[1:])
        elif head == "irrep":
            if len(tokens) < 5 or tokens[2] != "dim" or tokens[4] != "values":
                raise SpecSyntaxError(f"malformed line: {line}")
            idx, dim = _ints([tokens[1], tokens[3]], line)
            rest = line.split("values", 1)[1]
            irreps[idx] = (dim, [parse_cyc(v) for v in _split_values(rest)])
        elif head == "qchar":
            if len(tokens) < 2 or tokens[1] != "values":
                raise SpecSyntaxError(f"malformed line: {line}")
            qchar = [parse_cyc(v) for v in _split_values(line.split("values", 1)[1])]
        else:
            raise SpecSyntaxError(f"unknown record {head!r}")
    if header is None:
        raise SpecSyntaxError("missing group header")
    name, order, conductor, nclasses, nirreps, n = header
    if sorted(classes) != list(range(nclasses)):
        raise SpecSyntaxError("class records do not match the header count")
    if sorted(irreps) != list(range(nirreps)):
        raise SpecSyntaxError("irrep records do not match the header count")
    if qchar is None:
        raise SpecSyntaxError("missing qchar record")
    for k in range(2, n + 1):
        if k not in power_maps:
            raise SemanticError("missing power map")
    power_maps[1] = tuple(range(nclasses))
    for k, pm in power_maps.items():
        if len(pm) != nclasses or any(not 0 <= c < nclasses for c in pm):
            raise SpecSyntaxError(f"power map {k} has the wrong shape")
    for idx, (_, vals) in irreps.items():
        if len(vals) != nclasses:
            raise SpecSyntaxError(f"irrep {idx} has {len(vals)} values, expected {nclasses}")
    if len(qchar) != nclasses:
        raise SpecSyntaxError("qchar has the wrong number of values")
    group = GroupData(
        name=name,
        order=order,
        conductor=conductor,
        embedding_dim=n,
        classes=tuple(classes[i] for i in range(nclasses)),
        power_maps=dict(sorted(power_maps.items())),
        irreps=tuple(Irrep(i, irreps[i][0], tuple(irreps[i][1])) for i in range(nirreps)),
        q_char=VirtualCharacter(qchar),
    )
    validate(group)
    return group


def validate(G: GroupData) -> None:
    """Check every structural invariant of GroupData; raise SemanticError otherwise."""
    if sum(G.class_sizes) != G.order:
        raise SemanticError("class sizes do not sum to |G|")
    if G.classes[0].size != 1 or G.classes[0].element_order != 1:
        raise SemanticError("class 0 must be the identity")
    if any(G.order % c.size for c in G.classes):
        raise SemanticError("class size does not divide |G|")
    if any(G.conductor % c.element_order for c in G.classes):
        raise SemanticError("element order does not divide the conductor")
    if G.num_irreps != G.num_classes:
        raise SemanticError("number of irreps differs from number of classes")
    if any(v != 1 for v in G.irreps[0].values):
        raise SemanticError("irrep 0 must be the trivial character")
    for ir in G.irreps:
        if ir.values[0] != ir.dim:
            raise SemanticError(f"irrep {ir.index}: value at identity differs from its dimension")
    if G.q_char[0] != G.embedding_dim:
        raise SemanticError("qchar at identity must equal the embedding dimension")
    if sum(d * d for d in G.dims) != G.order:
        raise SemanticError("orthogonality violated")
    chars = G.characters()
    for i, x in enumerate(chars):
        for j in range(i, len(chars)):
            ip = inner_product(x, chars[j], G)
            if ip != int(i == j):
                raise SemanticError("orthogonality violated")
    for k, pm in G.power_maps.items():
        if pm[0] != 0:
            raise SemanticError(f"power map {k} does not fix the identity class")
    # q must be a genuine character of the group
    decompose(G.q_char, G)


# ---------------------------------------------------------------------------
# serialization


def format_table(G: GroupData) -> str:
    lines = [
        f"group {G.name} order {G.order} conductor {G.conductor} classes {G.num_classes} "
        f"irreps {G.num_irreps} embedding_dim {G.embedding_dim}"
    ]
    for i, c in enumerate(G.classes):
        lines.append(f"class {i} size {c.size} element_order {c.element_order}")
    for k in range(2, G.embedding_dim + 1):
        lines.append(f"powermap {k} " + " ".join(str(c) for c in G.power_maps[k]))
    for ir in G.irreps:
        lines.append(f"irrep {ir.index} dim {ir.dim} values " + " ".join(format_cyc(v) for v in ir.values))
    lines.append("qchar values " + " ".join(format_cyc(v) for v in G.q_char))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# character operations


def inner_product(x: VirtualCharacter, y: VirtualCharacter, G: GroupData) -> CyclotomicNumber:
    """(1/|G|) * sum over classes of |c| x(c) conj(y(c))."""
    if len(x) != G.num_classes or len(y) != G.num_classes:
        raise ValueError("class function length does not match the group")
    if "ip_scales" not in G._cache:
        G._cache["ip_scales"] = [Fraction(s, G.order) for s in G.class_sizes]
    return cyc_dot(x.values, y.values, G._cache["ip_scales"], conj=True)


def exterior_power_char(x: VirtualCharacter, k: int, G: GroupData) -> VirtualCharacter:
    """Character of the k-th exterior power via Newton's identities.

    k e_k = sum_{m=1}^{k} (-1)^(m-1) e_{k-m} p_m with p_m(c) = x(g^m).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > 1 and any(m not in G.power_maps for m in range(2, k + 1)):
        raise SemanticError("power map missing")
    nc = G.num_classes
    powers = {m: VirtualCharacter(x[G.power_maps[m][c]] for c in range(nc)) for m in range(1, k + 1)}
    e = [G.trivial()]
    for j in range(1, k + 1):
        acc = VirtualCharacter([0] * nc)
        for m in range(1, j + 1):
            term = e[j - m] * powers[m]
            acc = acc + term if m % 2 else acc - term
        e.append(acc * Fraction(1, j))
    return e[k]


def is_free(G: GroupData) -> bool:
    """True iff det(I - g) != 0 for every nonidentity g, i.e. no eigenvalue 1."""
    key = "is_free"
    if key not in G._cache:
        alt = alternating_lambda(G)
        G._cache[key] = all(not alt[c].is_zero() for c in range(1, G.num_classes))
    return G._cache[key]


def alternating_lambda(G: GroupData) -> VirtualCharacter:
    """sum_k (-1)^k Lambda^k Q, whose value at g is det(I - g)."""
    acc = VirtualCharacter([0] * G.num_classes)
    for k in range(G.embedding_dim + 1):
        lam = G.lambda_char(k)
        acc = acc + lam if k % 2 == 0 else acc - lam
    return acc


def decompose(x: VirtualCharacter, G: GroupData) -> list[int]:
    """Multiplicities <x, chi_j> of every irreducible character."""
    out = []
    for chi in G.characters():
        ip = inner_product(x, chi, G)
        try:
            q = cyc_to_rational(ip)
        except SemanticError:
            raise SemanticError("non-integral multiplicity") from None
        if q.denominator != 1:
            raise SemanticError("non-integral multiplicity")
        out.append(int(q))
    return out


def recompose(mults: Sequence[int], G: GroupData) -> VirtualCharacter:
    acc = VirtualCharacter([0] * G.num_classes)
    for m, chi in zip(mults, G.characters()):
        if m:
            acc = acc + chi * m
    return acc


def free_weight_triples(r: int, *, up_to_symmetry: bool = True) -> list[tuple[int, int, int]]:
    """Weight triples (a, b, c) mod r with a + b + c = 0 and every weight coprime to r.

    With ``up_to_symmetry`` only one representative is kept per class under
    permutation of the weights and scaling by units mod r; both operations
    produce the same subgroup of SL(3, C) up to conjugacy and relabelling of
    the generator.
    """
    units = [u for u in range(1, r) if math.gcd(u, r) == 1]
    seen: set[tuple[int, int, int]] = set()
    out = []
    for a in units:
        for b in units:
            c = (-a - b) % r
            if math.gcd(c, r) != 1:
                continue
            triple = (a, b, c)
            if not up_to_symmetry:
                out.append(triple)
                continue
            key = min(tuple(sorted((u * w) % r for w in triple)) for u in units)
            if key not in seen:
                seen.add(key)
                out.append(key)
    return out
