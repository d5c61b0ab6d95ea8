"""
Pointlessness verification
==========================

A curve has no places of degree < n iff every place P of F_q(x) with
deg P < n has deg(P) * f(P) >= n in the extension. The scan covers the
infinite place, every finite place (ramified ones included) and proceeds
by degree; within a degree the order is the enumeration order with
infinity first in degree 1. The first violating place in that order is
the witness.

Features:
- Early exit at the first violation
- Per-degree tallies of the minimal deg * f below the witness degree
- Optional process pool over degree classes with the same report
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..gfpoly import Place, Poly, render_poly
from ..rayclass import GeometricExtension, genus, inertia_degree

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    place: Place
    degree: int
    f: int

    @property
    def residue_degree(self) -> int:
        return self.degree * self.f

    def to_dict(self, use_hex: bool = False) -> dict:
        place = "inf" if self.place.is_infinite else render_poly(self.place.poly, use_hex)
        return {"place": place, "degree": self.degree, "f": self.f}


@dataclass
class PointlessReport:
    extension: GeometricExtension
    n: int
    verdict: bool
    witness: Optional[Witness] = None
    genus: Optional[int] = None
    tallies: Dict[int, int] = field(default_factory=dict)
    places_scanned: int = 0
    elapsed: Optional[float] = None

    @property
    def degree(self) -> int:
        return self.extension.degree

    def to_dict(self, use_hex: bool = False, timings: bool = False) -> dict:
        ext = self.extension
        data = {
            "q": ext.group.field.q,
            "n": self.n,
            "modulus": ext.modulus.to_text(use_hex),
            "B0": [render_poly(g, use_hex) for g in ext.b0_generators()],
            "u": render_poly(ext.u_residue(), use_hex),
            "degree": self.degree,
            "genus": self.genus,
            "verdict": self.verdict,
            "witness": self.witness.to_dict(use_hex) if self.witness else None,
            "tallies": {str(k): v for k, v in sorted(self.tallies.items())},
            "places_scanned": self.places_scanned,
        }
        if timings:
            data["timings"] = {"elapsed_seconds": self.elapsed}
        return data


def scan_degree(extension: GeometricExtension, t: int, n: int):
    """
    Scan the places of degree t up to the first one with t*f < n

    Returns:
        (minimal t*f seen, Witness or None, number of places scanned)
    """
    group = extension.group
    field_spec = group.field
    best = None
    count = 0

    if t == 1:
        count += 1
        f = inertia_degree(extension, Place.infinity(field_spec))
        best = f
        if f < n:
            return best, Witness(Place.infinity(field_spec), 1, f), count

    for poly, h in group.place_classes(t):
        count += 1
        if h is None:
            f = inertia_degree(extension, Place(field_spec, poly))
        else:
            f = extension.frobenius_order(h, t)
        product = t * f
        if best is None or product < best:
            best = product
        if product < n:
            return best, Witness(Place(field_spec, poly), t, f), count
    return best, None, count


def _scan_task(args):
    extension, t, n = args
    return t, scan_degree(extension, t, n)


def verify_pointless(extension: GeometricExtension, n: int, threads: int = 1,
                     compute_genus: bool = True) -> PointlessReport:
    """
    Check that the curve of the extension has no places of degree < n

    Args:
        extension: the extension to verify
        n: target degree (n = 1 is vacuous)
        threads: worker processes for the degree classes; 1 scans serially
        compute_genus: also fill in the genus
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    started = time.perf_counter()
    tallies: Dict[int, int] = {}
    witness = None
    scanned = 0

    degrees = list(range(1, n))
    if threads > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = dict(pool.map(_scan_task, [(extension, t, n) for t in degrees]))
    else:
        results = {}

    for t in degrees:
        best, found, count = results[t] if t in results else scan_degree(extension, t, n)
        scanned += count
        if found is not None:
            witness = found
            break
        tallies[t] = best

    report = PointlessReport(
        extension=extension,
        n=n,
        verdict=witness is None,
        witness=witness,
        genus=genus(extension) if compute_genus else None,
        tallies=tallies,
        places_scanned=scanned,
        elapsed=time.perf_counter() - started,
    )
    logger.debug(
        f"Extension mod {extension.modulus} (d={extension.degree}, u={extension.u}): "
        f"verdict {report.verdict} at n={n}"
    )
    return report


def min_residue_degree(extension: GeometricExtension, bound: Optional[int] = None) -> int:
    """
    Least degree deg(P) * f(P) of a place of the curve; the curve has no
    places of degree < n exactly when n is at most this value

    Args:
        bound: a known residue degree (e.g. a witness), so only place
            degrees below it are scanned
    """
    best, _, _ = scan_degree(extension, 1, 0)
    if bound is not None:
        best = min(best, bound)
    t = 2
    while t < best:
        value, _, _ = scan_degree(extension, t, 0)
        if value is not None:
            best = min(best, value)
        t += 1
    return best
