"""JSON assembly for reports, spectra and flow runs.

Exact quantities are written as rational strings ("p/q", or "p" for integers);
floating-point flow quantities are written with 17 significant digits.
"""
from __future__ import annotations

import json
import math
import uuid
from fractions import Fraction
from typing import Any

from .core import adjacency, ade_classify, cartan, kappa_report
from .errors import SemanticError
from .eta import chain_identity, eta_weights
from .exact import RationalMatrix, format_cyc, format_rational
from .groups import GroupData, is_free
from .quiver import moment_map, n_residual
from .spectrum import aggregate, dirac_spectrum

__all__ = ["build_report", "eta_section", "cartan_section", "spectrum_payload", "dumps",
           "flow_payload"]


def _matrix(M: RationalMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in M.tolist()]


def _rationals(xs) -> list[str]:
    return [format_rational(Fraction(x)) for x in xs]


def group_summary(G: GroupData) -> dict[str, Any]:
    return {
        "name": G.name,
        "order": G.order,
        "embedding_dim": G.embedding_dim,
        "conductor": G.conductor,
        "abelian": G.is_abelian,
        "weights": list(G.weights) if G.weights is not None else None,
        "dims": list(G.dims),
    }


def character_section(G: GroupData) -> dict[str, Any]:
    return {
        "classes": [{"label": c.label, "size": c.size, "element_order": c.element_order}
                    for c in G.classes],
        "irreps": [[format_cyc(x) for x in chi] for chi in G.characters()],
        "q_char": [format_cyc(x) for x in G.q_char],
    }


def _require_isolated(G: GroupData) -> None:
    # a non-free n = 3 cyclic group fixes a line, so its singularity is not isolated
    if G.embedding_dim == 3 and G.is_abelian and not is_free(G):
        raise SemanticError("non-isolated singularity")


def cartan_section(G: GroupData, bundle=None) -> dict[str, Any]:
    _require_isolated(G)
    bundle = bundle or cartan(G)
    return {
        "mode": bundle.mode,
        "extended": _matrix(bundle.extended),
        "reduced": _matrix(bundle.reduced),
        "inverse": _matrix(bundle.inverse),
    }


def eta_section(G: GroupData, bundle=None) -> dict[str, Any]:
    eta_weights(G)  # raises the precondition errors first
    bundle = bundle or cartan(G)
    rep = chain_identity(G, bundle)
    kap = kappa_report(G, bundle)
    return {
        "per_irrep": _rationals(rep.per_irrep),
        "table": _matrix(rep.table),
        "chain": _matrix(rep.chain),
        "closed_form": _matrix(rep.closed_form),
        "chain_matches": rep.chain_matches,
        "oracle_matches": rep.oracle_matches,
        "sign": kap.sign,
        "notes": list(rep.notes),
    }


def build_report(G: GroupData) -> dict[str, Any]:
    _require_isolated(G)
    if G.embedding_dim == 3:
        eta_weights(G)
    q = adjacency(G)
    bundle = cartan(G, q)
    report: dict[str, Any] = {
        "group": group_summary(G),
        "character_table": character_section(G),
        "adjacency": {
            "a": [list(r) for r in q.arrows],
            "b": [list(r) for r in q.coarrows] if q.coarrows is not None else None,
        },
        "cartan": cartan_section(G, bundle),
        "pairing_matrix": _matrix(bundle.inverse),
        "free": is_free(G),
        "ade": ade_classify(q) if G.embedding_dim == 2 else None,
        "eta": None,
        "kappa": None,
    }
    if G.embedding_dim == 3:
        report["eta"] = eta_section(G, bundle)
        kap = kappa_report(G, bundle)
        report["kappa"] = {
            "matrix": _matrix(kap.matrix),
            "zero_border": kap.zero_border,
            "sign": kap.sign,
            "block_ok": kap.block_ok,
        }
    return report


def spectrum_payload(n: int, cutoff) -> dict[str, Any]:
    entries = dirac_spectrum(n, cutoff)
    return {
        "n": n,
        "cutoff": format_rational(Fraction(cutoff)),
        "aggregated": [{"eigenvalue": format_rational(ev), "multiplicity": m}
                       for ev, m in aggregate(entries).items()],
        "families": [{
            "family": e.family,
            "params": list(e.params),
            "weight": _rationals(e.weight.mu),
            "eigenvalue": format_rational(e.eigenvalue),
            "multiplicity": e.multiplicity,
        } for e in entries],
    }


def flow_payload(result, analysis, start, expected_dim: int) -> dict[str, Any]:
    return {
        "start": [[z.real, z.imag] for z in start],
        "target": list(result.target.components),
        "mu": list(moment_map(result.point).components),
        "residual": result.residual,
        "iterations": result.iterations,
        "n_residual": n_residual(result.point),
        "log_scale": list(result.log_scale),
        "quotient_dim": analysis.dim,
        "expected_dim": expected_dim,
        "dim_matches": analysis.dim == expected_dim,
        "kernel_dim": analysis.kernel,
        "group_dim": analysis.group_dim,
        "rank_cut": analysis.cut,
        "gap_ratio": analysis.gap_ratio,
        "singular_values": list(analysis.singular_values),
    }


def dumps(obj: Any) -> str:
    """Deterministic JSON; floats get 17 significant digits, non-finite floats become null."""
    floats: dict[str, str] = {}
    tag = uuid.uuid4().hex

    def swap(x):
        if isinstance(x, bool) or x is None:
            return x
        if isinstance(x, float):
            if not math.isfinite(x):
                return None
            key = f"{tag}{len(floats)}"
            floats[key] = format(x, ".17g")
            return key
        if isinstance(x, dict):
            return {k: swap(v) for k, v in x.items()}
        if isinstance(x, (list, tuple)):
            return [swap(v) for v in x]
        return x

    text = json.dumps(swap(obj), indent=2)
    for key, lit in floats.items():
        text = text.replace(f'"{key}"', lit, 1)
    return text + "\n"
