"""Spherical-code parameters, per-lattice verification, table reproduction.

The verification report is assembled from exact quantities only; JSON
renders every rational as a "p/q" string so nothing is rounded on the way
out.  Table reproduction compares computed values to the stored reference
rows with exact equality and emits PASS/FAIL (or DATA-REQUIRED when a
catalog Gram file is not shipped).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .catalog import CatalogDataMissing, LatticeSpec, catalog
from .designs import design_strength, venkov_5design
from .embedding import (
    EmbeddedSpectrum,
    dim_harm,
    embed,
    embedded_gram,
    theorem_check,
)
from .enumeration import (
    NotAntipodalError,
    VectorSet,
    halve_antipodal,
    minimal_vector_set,
)
from .reference_tables import ReferenceRow, rows_for_example
from .spectrum import PairSpectrum, pair_spectrum


@dataclass(frozen=True)
class CodeParams:
    """Antipodal spherical code parameters (ambient dim, N, max product)."""

    ambient: int
    size: int
    a: Fraction
    spectrum_abs: tuple[Fraction, ...]
    antipodal: bool = True

    def as_tuple(self) -> tuple[int, int, Fraction]:
        return (self.ambient, self.size, self.a)


def code_params(spec: PairSpectrum | EmbeddedSpectrum) -> CodeParams:
    """Code parameters of an antipodal set: s = +-1 pairs (self/antipodal)
    are excluded, the rest enter by absolute value."""
    if isinstance(spec, EmbeddedSpectrum):
        spec = spec.spectrum
    if not spec.antipodal:
        raise NotAntipodalError("code parameters are defined for antipodal sets")
    vals = sorted({abs(s) for s, _ in spec.entries if abs(s) != 1})
    a = max(vals, default=Fraction(0))
    return CodeParams(ambient=spec.d + 1, size=spec.size, a=a,
                      spectrum_abs=tuple(vals))


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def verify_lattice(spec: LatticeSpec, t_max: int = 11, threads: int = 1,
                   matrix_cap: int = 512, vectors: VectorSet | None = None,
                   seed: int | None = None) -> dict:
    """Full pipeline on one lattice; returns the JSON-ready report dict.

    Enumerates minimal vectors (unless supplied), checks the kissing count
    when an expectation exists, evaluates the source moment criteria and
    design strength, embeds the halved set, certifies the embedded
    3-design, and adds an exact PSD rank certificate when the set fits the
    matrix cap.  verdict is PASS only if every certified property holds.
    """
    if vectors is None:
        vs = minimal_vector_set(spec.gram)
    else:
        vs = vectors
    kissing_ok = None
    if spec.expected_kissing is not None:
        kissing_ok = vs.count == spec.expected_kissing
    min_norm_ok = True
    if spec.expected_min_norm is not None:
        min_norm_ok = vs.min_norm == spec.expected_min_norm

    src = pair_spectrum(vs, threads=threads)
    v5_holds, lhs2, lhs4 = venkov_5design(src)
    d = src.d
    strength = design_strength(src, t_max)

    halved = halve_antipodal(vs, seed=seed)
    emb = embed(pair_spectrum(halved, threads=threads))
    is_3design, lhs, rhs = theorem_check(emb)
    emb_code = code_params(emb)

    embedded: dict = {
        "D": emb.target_D,
        "code": [emb_code.ambient, emb_code.size, _frac(emb_code.a)],
        "spectrum": emb.spectrum.to_triples(),
        "theorem_check": {"lhs": _frac(lhs), "rhs": _frac(rhs)},
        "is_3design": is_3design,
    }
    rank_ok = True
    if halved.count <= matrix_cap:
        eg = embedded_gram(halved, cap=matrix_cap)
        is_psd, rank = eg.rank_certificate()
        rank_ok = is_psd and rank <= emb.target_D
        embedded["rank_certificate"] = {"is_psd": is_psd, "rank": rank}

    ok = (kissing_ok is not False and min_norm_ok and v5_holds
          and is_3design and rank_ok)
    return {
        "lattice": spec.name,
        "d": d,
        "N": vs.count,
        "min_norm": _frac(vs.min_norm),
        "kissing_ok": kissing_ok,
        "source_spectrum": src.to_triples(),
        "venkov5": {
            "holds": v5_holds,
            "moment2": _frac(lhs2),
            "moment4": _frac(lhs4),
            "target2": _frac(Fraction(1, d + 1)),
            "target4": _frac(Fraction(3, (d + 3) * (d + 1))),
        },
        "design_strength": strength,
        "embedded": embedded,
        "verdict": "PASS" if ok else "FAIL",
    }


@dataclass(frozen=True)
class TableRow:
    lattice: str
    status: str                      # PASS | FAIL | DATA-REQUIRED
    expected: ReferenceRow
    computed_code: tuple[int, int, Fraction] | None = None
    computed_source_abs: tuple[Fraction, ...] | None = None
    computed_embedded_abs: tuple[Fraction, ...] | None = None
    computed_strength: int | None = None
    detail: str = ""


def _reproduce_row(ref: ReferenceRow, threads: int) -> TableRow:
    try:
        spec = catalog(ref.lattice)
    except CatalogDataMissing as exc:
        return TableRow(lattice=ref.lattice, status="DATA-REQUIRED",
                        expected=ref, detail=str(exc))
    vs = minimal_vector_set(spec.gram)
    problems = []
    if vs.count != ref.size:
        problems.append(f"kissing {vs.count} != {ref.size}")
    src = pair_spectrum(vs, threads=threads)
    v5, _, _ = venkov_5design(src)
    if not v5:
        problems.append("source moment criteria fail")
    src_code = code_params(src)
    if src_code.spectrum_abs != ref.source_abs:
        problems.append(
            f"source products {_abs_str(src_code.spectrum_abs)} != "
            f"{_abs_str(ref.source_abs)}")

    halved = halve_antipodal(vs)
    emb = embed(pair_spectrum(halved, threads=threads))
    is3, lhs, rhs = theorem_check(emb)
    if not is3:
        problems.append(f"embedded moment {lhs} != {rhs}")
    emb_code = code_params(emb)
    if emb_code.as_tuple() != (ref.ambient, ref.size, ref.a):
        problems.append(
            f"embedded code {emb_code.as_tuple()} != "
            f"({ref.ambient}, {ref.size}, {ref.a})")
    if emb_code.spectrum_abs != ref.embedded_abs:
        problems.append(
            f"embedded products {_abs_str(emb_code.spectrum_abs)} != "
            f"{_abs_str(ref.embedded_abs)}")

    strength = None
    if ref.source_strength is not None:
        strength = design_strength(src, ref.source_strength + 1)
        if strength != ref.source_strength:
            problems.append(
                f"design strength {strength} != {ref.source_strength}")

    return TableRow(
        lattice=ref.lattice,
        status="FAIL" if problems else "PASS",
        expected=ref,
        computed_code=emb_code.as_tuple(),
        computed_source_abs=src_code.spectrum_abs,
        computed_embedded_abs=emb_code.spectrum_abs,
        computed_strength=strength,
        detail="; ".join(problems),
    )


def reproduce_table(example: int, threads: int = 1) -> list[TableRow]:
    """Recompute one published table; exact comparison per row."""
    return [_reproduce_row(ref, threads) for ref in rows_for_example(example)]


def _abs_str(vals) -> str:
    return "{" + ", ".join(str(v) for v in vals) + "}"


def _code_str(code) -> str:
    ambient, size, a = code
    return f"({ambient}, {size}, {a})"


def table_text(rows: list[TableRow]) -> str:
    """Plain-text rendering mirroring the three-column table layout."""
    out = []
    header = f"{'lattice':<9} {'(D, N, a) code':<22} {'|(x,y)|':<22} {'|<Gx,Gy>|':<22} verdict"
    out.append(header)
    out.append("-" * len(header))
    for row in rows:
        if row.status == "DATA-REQUIRED":
            out.append(f"{row.lattice:<9} {'':<22} {'':<22} {'':<22} DATA-REQUIRED")
            continue
        out.append(
            f"{row.lattice:<9} {_code_str(row.computed_code):<22} "
            f"{_abs_str(row.computed_source_abs):<22} "
            f"{_abs_str(row.computed_embedded_abs):<22} {row.status}")
        if row.detail:
            out.append(f"          {row.detail}")
    return "\n".join(out)


def table_json(rows: list[TableRow]) -> str:
    payload = []
    for row in rows:
        entry: dict = {
            "lattice": row.lattice,
            "status": row.status,
            "expected": {
                "code": [row.expected.ambient, row.expected.size,
                         _frac(row.expected.a)],
                "source_abs": [_frac(v) for v in row.expected.source_abs],
                "embedded_abs": [_frac(v) for v in row.expected.embedded_abs],
            },
        }
        if row.expected.source_strength is not None:
            entry["expected"]["source_strength"] = row.expected.source_strength
        if row.computed_code is not None:
            entry["computed"] = {
                "code": [row.computed_code[0], row.computed_code[1],
                         _frac(row.computed_code[2])],
                "source_abs": [_frac(v) for v in row.computed_source_abs],
                "embedded_abs": [_frac(v) for v in row.computed_embedded_abs],
            }
            if row.computed_strength is not None:
                entry["computed"]["source_strength"] = row.computed_strength
        if row.detail:
            entry["detail"] = row.detail
        payload.append(entry)
    return json.dumps(payload, indent=2)


def report_text(report: dict) -> str:
    """Human-oriented rendering of a verify_lattice report."""
    lines = [
        f"lattice {report['lattice']}: {report['N']} minimal vectors of "
        f"norm {report['min_norm']} on S^{report['d']}",
    ]
    if report["kissing_ok"] is not None:
        lines.append(f"  kissing count check: "
                     f"{'ok' if report['kissing_ok'] else 'MISMATCH'}")
    v5 = report["venkov5"]
    lines.append(
        f"  moment criteria: holds={v5['holds']} "
        f"(s^2: {v5['moment2']} vs {v5['target2']}, "
        f"s^4: {v5['moment4']} vs {v5['target4']})")
    lines.append(f"  design strength: {report['design_strength']}")
    emb = report["embedded"]
    lines.append(
        f"  embedded code ({emb['code'][0]}, {emb['code'][1]}, {emb['code'][2]}) "
        f"in R^{emb['D']}")
    tc = emb["theorem_check"]
    lines.append(
        f"  embedded 3-design: {emb['is_3design']} "
        f"(moment {tc['lhs']} vs {tc['rhs']})")
    if "rank_certificate" in emb:
        rc = emb["rank_certificate"]
        lines.append(
            f"  rank certificate: psd={rc['is_psd']} rank={rc['rank']} "
            f"(dim bound {emb['D']})")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines)
