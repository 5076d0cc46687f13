"""Acceptance criteria, one test each.  Every test records a PASS/FAIL line that
is printed in the terminal summary (see conftest.record)."""
import json
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from mckay import ade
from mckay.cli import main
from mckay.core import adjacency, ade_classify, classical_cartan, generalized_cartan, kappa_report
from mckay.eta import chain_identity, eta_table, orthogonality_sum
from mckay.exact import RationalMatrix, mat_det
from mckay.groups import free_weight_triples
from mckay.quiver import (FlowConfig, build_invariant_basis, flow, moment_map, orbit_point,
                          quotient_analysis, random_point)
from mckay.spectrum import aggregate, dirac_spectrum, spectrum_symmetry

from conftest import GOLDEN, cyclic, record, table

SPECS = Path(__file__).parent / "specs"


def test_criterion_1_classical_mckay():
    start = time.perf_counter()
    groups = [cyclic(k, 1, k - 1) for k in range(2, 9)]
    groups += [table(f"binary_dihedral_{k}") for k in range(2, 6)]
    groups += [table(n) for n in ("binary_tetrahedral", "binary_octahedral", "binary_icosahedral")]
    failures = []
    for G in groups:
        q = adjacency(G)
        label, perm = ade.classify_graph([list(r) for r in q.arrows])
        assert label == ade_classify(q)
        extended = classical_cartan(G, q).extended
        template = ade.load_template(label)
        # entry-exact under the vertex matching: (2I - A)[i, j] == template[perm i, perm j]
        same = all(extended[i, j] == template[perm[i], perm[j]]
                   for i in range(extended.rows) for j in range(extended.cols))
        if not same:
            failures.append(G.name)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 5
    record(1, ok, f"{len(groups)} groups match affine templates exactly, {elapsed:.2f}s (< 5s)"
           + (f"; mismatches {failures}" if failures else ""))
    assert ok


def test_criterion_2_surface_pairing():
    bad = []
    for k in range(2, 13):
        bundle = classical_cartan(cyclic(k, 1, k - 1))
        n = k - 1
        closed = RationalMatrix.from_rows(
            [[Fraction(-min(i, j) * (k - max(i, j)), k) for j in range(1, n + 1)] for i in range(1, n + 1)])
        neg_inv = -bundle.inverse
        if neg_inv != closed or neg_inv @ bundle.reduced != -RationalMatrix.identity(n):
            bad.append(k)
    record(2, not bad, "-C^-1 equals -min(i,j)(k-max(i,j))/k and multiplies back to -I for k = 2..12"
           + (f"; failed k {bad}" if bad else ""))
    assert not bad


def _check_n3(G):
    bundle = generalized_cartan(G)
    size = G.num_irreps
    dims = RationalMatrix(size, 1, G.dims)
    if not (bundle.extended @ dims).is_zero() or mat_det(bundle.reduced) == 0:
        return "cartan"
    table_ = eta_table(G)  # entries are Fractions: rationality is enforced on construction
    if table_.T != -table_ or any(table_[i, i] != 0 for i in range(size)):
        return "eta table"
    rep = chain_identity(G, bundle, table_)
    oracle = RationalMatrix(size, size, [-orthogonality_sum(G, i, j) / G.order
                                         for i in range(size) for j in range(size)])
    if not (rep.chain_matches and rep.oracle_matches and rep.chain == oracle):
        return "chain"
    return None


def test_criterion_3_n3_exact_suite():
    start = time.perf_counter()
    checked, failures = 0, []
    for r in range(2, 32):
        for weights in free_weight_triples(r):
            G = cyclic(r, *weights)
            problem = _check_n3(G)
            checked += 1
            if problem:
                failures.append((G.name, problem))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60
    record(3, ok, f"{checked} free weight classes (r <= 31, up to permutation and unit scaling) "
           f"pass kernel/det/eta/chain checks in {elapsed:.1f}s (< 60s)"
           + (f"; failures {failures[:5]}" if failures else ""))
    assert ok


def test_criterion_4_kappa_block_form():
    signs, bad = set(), []
    count = 0
    for r in range(2, 32):
        for weights in free_weight_triples(r):
            G = cyclic(r, *weights)
            rep = kappa_report(G)
            count += 1
            if not rep.block_ok:
                bad.append(G.name)
            signs.add(rep.sign)
    ok = not bad and len(signs) == 1
    record(4, ok, f"kappa has zero border and lower block eps*C with eps = {sorted(signs, key=str)} "
           f"over {count} groups" + (f"; bad {bad[:5]}" if bad else ""))
    assert ok


def test_criterion_5_sphere_spectrum():
    start = time.perf_counter()
    totals = aggregate(dirac_spectrum(2, Fraction(3, 2) + 20))
    mult_ok = all(totals.get(s * (Fraction(3, 2) + k)) == (k + 1) * (k + 2)
                  for k in range(21) for s in (1, -1))
    gap_ok = True
    for n in range(2, 6):
        t = aggregate(dirac_spectrum(n, Fraction(2 * n - 1, 2) + 4))
        gap_ok &= min(e for e in t if e > 0) == Fraction(2 * n - 1, 2)
        gap_ok &= max(e for e in t if e < 0) == -Fraction(2 * n - 1, 2)
    sym_ok = spectrum_symmetry(2, Fraction(41, 2)) and spectrum_symmetry(3, Fraction(25, 2))
    elapsed = time.perf_counter() - start
    ok = mult_ok and gap_ok and sym_ok and elapsed < 5
    record(5, ok, f"(k+1)(k+2) multiplicities {mult_ok}, extremal eigenvalues {gap_ok}, "
           f"symmetry {sym_ok}, {elapsed:.2f}s (< 5s)")
    assert ok


def test_criterion_6_moment_map_and_flow():
    rng = np.random.default_rng(6)
    notes, ok = [], True
    worst = 0.0
    for G in (cyclic(2, 1, 1), cyclic(3, 1, 1, 1)):
        basis = build_invariant_basis(G)
        for _ in range(100):
            p = random_point(basis, rng)
            t = rng.uniform(0.1, 10)
            rhs = t * t * moment_map(p).array
            worst = max(worst, np.linalg.norm(moment_map(p.scaled(t)).array - rhs) / np.linalg.norm(rhs))
    ok &= worst <= 1e-12
    notes.append(f"scaling rel err {worst:.1e}")
    for G, expected in ((cyclic(2, 1, 1), 4), (cyclic(3, 1, 1, 1), 6)):
        p = orbit_point(G, [1] + [0] * (G.embedding_dim - 1))
        start = time.perf_counter()
        res = flow(p, FlowConfig(tol=1e-10, max_iters=10_000))
        elapsed = time.perf_counter() - start
        qa = quotient_analysis(res.point, res.target)
        good = (res.residual <= 1e-8 and res.iterations <= 10_000 and elapsed < 10
                and qa.dim == expected and qa.gap_ratio >= 1e3)
        ok &= good
        notes.append(f"{G.name}: |mu-target| {res.residual:.1e} in {res.iterations} iters "
                     f"{elapsed:.2f}s, dim {qa.dim} (want {expected}), gap {qa.gap_ratio:.1e}")
    record(6, ok, "; ".join(notes))
    assert ok


def test_criterion_7_cli_golden_and_exit_codes(tmp_path, capsys):
    same = []
    for name in ("z3_111", "binary_icosahedral"):
        out = tmp_path / name
        code = main(["report", str(SPECS / f"{name}.spec"), "-o", str(out)])
        same.append(code == 0 and (out / "report.json").read_bytes()
                    == (GOLDEN / name / "report.json").read_bytes())
    ico = json.loads((GOLDEN / "binary_icosahedral" / "report.json").read_text())
    codes = {
        "parse": main(["report", str(SPECS / "bad_syntax.spec"), "-o", str(tmp_path)]),
        "semantic": main(["report", str(SPECS / "not_sl.spec"), "-o", str(tmp_path)]),
        "non-isolated": main(["report", str(SPECS / "non_isolated.spec"), "-o", str(tmp_path)]),
        "convergence": main(["flow", str(SPECS / "z2_11.spec"), "--max-iters", "1", "--target", "50",
                             "-o", str(tmp_path / "flow")]),
    }
    capsys.readouterr()
    expected = {"parse": 2, "semantic": 3, "non-isolated": 3, "convergence": 4}
    ok = all(same) and ico["ade"] == "E8" and codes == expected
    record(7, ok, f"golden reports byte-identical {same}, exit codes {codes}")
    assert ok
