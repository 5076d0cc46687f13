#!/usr/bin/env python3
"""Regenerate the synthesized data files under src/mckay/data/.

Binary dihedral tables come from the presentation <a, x | a^2k = 1, x^2 = a^k,
x a x^-1 = a^-1> with a = diag(z, z^-1), z = exp(pi i / k), x = [[0, -1], [1, 0]].
Affine Cartan templates are written for every diagram with at most 10 vertices.
The exceptional binary polyhedral tables are maintained by hand.
"""
import math
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from mckay.ade import affine_cartan  # noqa: E402
from mckay.exact import CyclotomicNumber, format_cyc, zeta  # noqa: E402
from mckay.groups import parse_table  # noqa: E402

DATA = ROOT / "src" / "mckay" / "data"


def binary_dihedral(k: int) -> str:
    order = 4 * k
    two_k = 2 * k
    conductor = math.lcm(two_k, 4)
    z = [zeta(two_k, j) for j in range(two_k)]
    i_unit = zeta(4, 1)

    # classes: 1, a^k, a^j (j = 1..k-1), x, xa
    reps = [("a", 0), ("a", k)] + [("a", j) for j in range(1, k)] + [("x", 0), ("x", 1)]
    sizes = [1, 1] + [2] * (k - 1) + [k, k]
    orders = [1, 2] + [two_k // math.gcd(two_k, j) for j in range(1, k)] + [4, 4]

    def a_class(j: int) -> int:
        j %= two_k
        j = min(j, two_k - j)
        if j == 0:
            return 0
        if j == k:
            return 1
        return j + 1

    powermap2 = [a_class(2 * j) if kind == "a" else 1 for kind, j in reps]

    def one_dim(s: int, t) -> list:
        vals = []
        for kind, j in reps:
            if kind == "a":
                vals.append(CyclotomicNumber.from_rational(s ** j))
            else:
                vals.append(t * (s ** j))
        return vals

    one = CyclotomicNumber.from_rational(1)
    if k % 2 == 0:
        t23 = [one, -one]
    else:
        t23 = [i_unit, -i_unit]
    irreps = [
        (1, one_dim(1, one)),
        (1, one_dim(1, -one)),
        (1, one_dim(-1, t23[0])),
        (1, one_dim(-1, t23[1])),
    ]
    for h in range(1, k):
        vals = []
        for kind, j in reps:
            if kind == "a":
                vals.append(z[(h * j) % two_k] + z[(-h * j) % two_k])
            else:
                vals.append(CyclotomicNumber.from_rational(0))
        irreps.append((2, vals))

    lines = [
        f"# binary dihedral group of order {order}, generated by tools/gen_tables.py",
        f"group binary_dihedral_{k} order {order} conductor {conductor} classes {k + 3} "
        f"irreps {k + 3} embedding_dim 2",
    ]
    for idx, (s, o) in enumerate(zip(sizes, orders)):
        lines.append(f"class {idx} size {s} element_order {o}")
    lines.append("powermap 2 " + " ".join(map(str, powermap2)))
    for idx, (dim, vals) in enumerate(irreps):
        lines.append(f"irrep {idx} dim {dim} values " + " ".join(format_cyc(v) for v in vals))
    lines.append("qchar values " + " ".join(format_cyc(v) for v in irreps[4][1]))
    return "\n".join(lines) + "\n"


def main() -> None:
    for k in range(2, 6):
        text = binary_dihedral(k)
        parse_table(text)
        (DATA / f"binary_dihedral_{k}.tbl").write_text(text)
    affine = DATA / "affine"
    affine.mkdir(exist_ok=True)
    labels = [f"A{n}" for n in range(1, 10)] + [f"D{n}" for n in range(4, 10)] + ["E6", "E7", "E8"]
    for label in labels:
        M = affine_cartan(label)
        (affine / f"{label}.mat").write_text(f"# affine {label}\n" + M.to_text())


if __name__ == "__main__":
    main()
