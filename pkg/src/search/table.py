"""
The table of pointless curves over F_2
======================================

Fixture lines read `n | g | d | modulus | S`, where d may be written as a
product (`7*7`). Each row claims a degree-d subfield of the ray class field
modulo m in which S splits completely and which has no places of degree
below n.

A trailing `# pointless only through n=k` marks a known erratum: no
candidate reaches n, and the best one has no places of degree below k.
"""

import logging
import re
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from tqdm import tqdm

from config import Config
from ..gfpoly import FieldSpec, Place, parse_poly, render_poly
from ..rayclass import GeometricExtension, genus, ray_class_group
from ..unitgroup import Modulus
from ..exceptions import PlaceInModulusError, TableInputError
from .verify import PointlessReport, min_residue_degree, verify_pointless

logger = logging.getLogger(__name__)

ERRATUM_PATTERN = re.compile(r"pointless only through n\s*=\s*(\d+)")


@dataclass(frozen=True)
class TableEntry:
    n: int
    g: int
    d_text: str
    modulus_text: str
    split_text: str
    line: str
    note: str = ""

    @property
    def erratum_through(self) -> Optional[int]:
        match = ERRATUM_PATTERN.search(self.note)
        return int(match.group(1)) if match else None

    @property
    def d(self) -> int:
        value = 1
        for part in self.d_text.split("*"):
            value *= int(part)
        return value

    @property
    def deep(self) -> bool:
        return self.n >= Config.DEEP_FROM

    def field(self) -> FieldSpec:
        return FieldSpec(2)

    def modulus(self) -> Modulus:
        return Modulus.parse(self.field(), self.modulus_text)

    def split_place(self) -> Place:
        return Place.finite(parse_poly(self.field(), self.split_text))


def parse_table_line(line: str) -> TableEntry:
    body, _, note = line.partition("#")
    parts = [p.strip() for p in body.split("|")]
    if len(parts) != 5:
        raise TableInputError(f"Table line needs 5 fields separated by '|': {line!r}")
    try:
        n, g = int(parts[0]), int(parts[1])
    except ValueError as e:
        raise TableInputError(f"Bad n or g in table line {line!r}") from e
    entry = TableEntry(n, g, parts[2], parts[3], parts[4], line, note.strip())
    through = entry.erratum_through
    if through is not None and not 1 <= through < n:
        raise TableInputError(f"Erratum bound n={through} must lie in [1, {n}) in {line!r}")
    return entry


def load_table(path: Optional[str] = None) -> List[TableEntry]:
    """Read the fixture; blank lines and '#' comments are skipped"""
    path = path or Config.FIXTURES_PATH
    entries = []
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            entries.append(parse_table_line(line))
    logger.debug(f"Loaded {len(entries)} table rows from {path}")
    return entries


def select_rows(entries: Sequence[TableEntry], rows: Optional[Sequence[int]] = None,
                deep: bool = False) -> List[TableEntry]:
    """Rows by n; without an explicit list, rows with n >= DEEP_FROM need `deep`"""
    if rows:
        by_n = {e.n: e for e in entries}
        missing = [n for n in rows if n not in by_n]
        if missing:
            raise TableInputError(f"No table rows for n = {missing}; available {sorted(by_n)}")
        return [by_n[n] for n in rows]
    return [e for e in entries if deep or not e.deep]


def find_table_extension(modulus: Modulus, d: int, split_place: Place) -> List[GeometricExtension]:
    """
    All extensions of degree d with conductor dividing m and constant field
    F_q in which S splits completely, i.e. all (B0, u) with [H:B0] = d and
    deg(S) * u = h(S) in H/B0

    Raises:
        TableInputError: when no extension matches
    """
    group = ray_class_group(modulus)
    if d < 1 or group.order % d:
        raise TableInputError(f"Degree {d} does not divide |H| = {group.order} for m = {modulus}")
    if not split_place.is_infinite and modulus.contains_place(split_place.poly):
        raise PlaceInModulusError(f"Split place {split_place} lies in the support of {modulus}")
    group.check_enumerable()

    target = group.artin_class(split_place)
    found = []
    for subgroup in group.relations.superlattices(d):
        for u in subgroup.solve_multiple(target.deg, target.h):
            found.append(GeometricExtension(group, subgroup, u))
    if not found:
        raise TableInputError(
            f"No extension of degree {d} modulo {modulus} splits {split_place} completely"
        )
    logger.debug(f"{len(found)} extension(s) of degree {d} mod {modulus} split {split_place}")
    return found


@dataclass
class TableRowResult:
    entry: TableEntry
    candidates: int
    reports: List[PointlessReport] = field(default_factory=list)
    elapsed: Optional[float] = None
    # largest k with a candidate free of places of degree < k; set when the row fails
    pointless_through: Optional[int] = None

    @property
    def pointless(self) -> List[PointlessReport]:
        return [r for r in self.reports if r.verdict]

    @property
    def passed(self) -> bool:
        return bool(self.pointless)

    @property
    def erratum_confirmed(self) -> bool:
        through = self.entry.erratum_through
        return not self.passed and through is not None and self.pointless_through == through

    @property
    def accepted(self) -> bool:
        return self.passed or self.erratum_confirmed

    @property
    def status(self) -> str:
        if self.passed:
            return "PASS"
        return "ERRATUM" if self.erratum_confirmed else "FAIL"

    @property
    def genera(self) -> List[int]:
        return sorted({r.genus for r in self.pointless})

    @property
    def genus_match(self) -> bool:
        return self.entry.g in self.genera

    def first_failure(self) -> Optional[PointlessReport]:
        failures = [r for r in self.reports if not r.verdict]
        return failures[0] if failures else None

    def to_dict(self, use_hex: bool = False, timings: bool = False) -> dict:
        entry = self.entry
        data = {
            "n": entry.n,
            "g": entry.g,
            "d": entry.d,
            "modulus": entry.modulus().to_text(use_hex),
            "split_place": render_poly(entry.split_place().poly, use_hex),
            "candidates": self.candidates,
            "pointless": len(self.pointless),
            "genera": self.genera,
            "genus_match": self.genus_match,
            "status": self.status,
            "extensions": [r.to_dict(use_hex, timings) for r in self.pointless],
        }
        if not self.passed and self.first_failure():
            data["failure"] = self.first_failure().to_dict(use_hex, timings)
            data["pointless_through"] = self.pointless_through
        if timings:
            data["timings"] = {"elapsed_seconds": self.elapsed}
        return data


def verify_table_row(entry: TableEntry, threads: int = 1, progress: bool = False) -> TableRowResult:
    """
    Reconstruct one row: find every candidate extension, verify each, and
    compare the genera of the pointless ones with the printed genus

    A row passes when some candidate of degree d is pointless for n; a
    genus that matches none of them is logged as a warning.
    """
    started = time.perf_counter()
    candidates = find_table_extension(entry.modulus(), entry.d, entry.split_place())
    result = TableRowResult(entry, len(candidates))
    for extension in tqdm(candidates, desc=f"Row n={entry.n}", disable=not progress):
        report = verify_pointless(extension, entry.n, threads=threads, compute_genus=False)
        if report.verdict:
            report.genus = genus(extension)
        result.reports.append(report)
    result.elapsed = time.perf_counter() - started

    if result.passed:
        logger.info(
            f"Row n={entry.n}: {len(result.pointless)} of {len(candidates)} candidate(s) pointless, "
            f"genera {result.genera}"
        )
        if not result.genus_match:
            logger.warning(
                f"Row n={entry.n}: printed genus {entry.g} differs from computed genera {result.genera}"
            )
    else:
        result.pointless_through = max(
            min_residue_degree(r.extension, r.witness.residue_degree) for r in result.reports
        )
        logger.info(
            f"Row n={entry.n}: no pointless candidate among {len(candidates)}, "
            f"best is pointless through n={result.pointless_through}"
        )
        if result.erratum_confirmed:
            logger.warning(f"Row n={entry.n}: known erratum confirmed ({entry.note})")
    return result
