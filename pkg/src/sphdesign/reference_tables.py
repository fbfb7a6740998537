"""Reference values the reproduction suite certifies against.

One row per lattice: the published code parameters (ambient dimension,
point count, max inner product), the absolute source inner-product set,
the absolute embedded inner-product set, and where claimed, the design
strength of the source set.  Kept as literal rational constants in one
place so each entry is auditable row by row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F


@dataclass(frozen=True)
class ReferenceRow:
    example: int
    lattice: str
    ambient: int
    size: int
    a: F
    source_abs: tuple[F, ...]
    embedded_abs: tuple[F, ...]
    source_strength: int | None = None


REFERENCE_ROWS: tuple[ReferenceRow, ...] = (
    ReferenceRow(1, "A2", 2, 6, F(1, 2), (F(1, 2),), (F(1, 2),)),
    ReferenceRow(1, "D4", 9, 24, F(1, 3), (F(0), F(1, 2)), (F(0), F(1, 3))),
    ReferenceRow(1, "E6", 20, 72, F(1, 5), (F(0), F(1, 2)), (F(1, 10), F(1, 5))),
    ReferenceRow(1, "E6dual", 20, 54, F(1, 8), (F(1, 4), F(1, 2)), (F(1, 10), F(1, 8))),
    ReferenceRow(1, "E7", 27, 126, F(1, 6), (F(0), F(1, 2)), (F(1, 8), F(1, 6))),
    ReferenceRow(1, "E7dual", 27, 56, F(1, 27), (F(1, 3),), (F(1, 27),)),
    ReferenceRow(1, "E8", 35, 240, F(1, 7), (F(0), F(1, 2)), (F(1, 7),)),
    ReferenceRow(1, "K10", 54, 276, F(1, 6), (F(0), F(1, 4), F(1, 2)),
                 (F(1, 24), F(1, 9), F(1, 6))),
    ReferenceRow(1, "K10dual", 54, 54, F(1, 6), (F(1, 8), F(1, 4), F(1, 2)),
                 (F(1, 24), F(3, 32), F(1, 6))),
    ReferenceRow(1, "CT12", 77, 756, F(2, 11), (F(0), F(1, 4), F(1, 2)),
                 (F(1, 44), F(1, 11), F(2, 11))),
    ReferenceRow(2, "BW16", 135, 4320, F(1, 5), (F(0), F(1, 4), F(1, 2)),
                 (F(0), F(1, 15), F(1, 5)), source_strength=7),
    ReferenceRow(3, "Leech", 299, 196560, F(5, 23), (F(0), F(1, 4), F(1, 2)),
                 (F(1, 46), F(1, 23), F(5, 23)), source_strength=11),
)


def rows_for_example(example: int) -> list[ReferenceRow]:
    out = [r for r in REFERENCE_ROWS if r.example == example]
    if not out:
        raise ValueError(f"no reference table {example}; choose 1, 2 or 3")
    return out
