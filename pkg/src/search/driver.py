"""
Conductor search
================

Builds square-free conductors from alpha places of degree m and beta
places of degree l (first places in enumeration order), and scans the
extensions with B0 trivial (the full ray class field twisted by u) for
one without places of degree < n.
"""

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations, islice, product
from typing import Iterator, List, Optional

from sympy import isprime
from tqdm import tqdm

from ..gfpoly import monic_irreducibles
from ..rayclass import GeometricExtension, genus, ray_class_group
from ..unitgroup import Modulus
from .lemmas import EulerLemmaReport, euler_lemma_check
from .search_config import SearchConfig
from .verify import PointlessReport, verify_pointless

logger = logging.getLogger(__name__)


@dataclass
class SearchResult:
    n: int
    degrees: tuple
    exponents: tuple
    report: Optional[PointlessReport] = None
    conductors_tried: List[Modulus] = field(default_factory=list)
    extensions_tried: int = 0
    prime_factor_checks: List[EulerLemmaReport] = field(default_factory=list)
    elapsed: Optional[float] = None

    @property
    def found(self) -> bool:
        return self.report is not None

    def to_dict(self, use_hex: bool = False, timings: bool = False) -> dict:
        data = {
            "n": self.n,
            "degrees": list(self.degrees),
            "exponents": list(self.exponents),
            "found": self.found,
            "conductors_tried": [m.to_text(use_hex) for m in self.conductors_tried],
            "extensions_tried": self.extensions_tried,
            "prime_factor_checks": [r.to_dict() for r in self.prime_factor_checks],
            "extension": self.report.to_dict(use_hex, timings) if self.report else None,
        }
        if timings:
            data["timings"] = {"elapsed_seconds": self.elapsed}
        return data


def conductors(cfg: SearchConfig, l: int, m: int, alpha: int, beta: int) -> Iterator[Modulus]:
    """Square-free moduli with alpha factors of degree m and beta of degree l, at most max_conductors"""
    if alpha < 0 or beta < 0 or alpha + beta == 0:
        raise ValueError(f"Need alpha, beta >= 0 and not both 0, got ({alpha}, {beta})")
    field_spec = cfg.q
    big = monic_irreducibles(field_spec, m)
    small = monic_irreducibles(field_spec, l)

    def generate():
        seen = set()
        for first, second in product(combinations(big, alpha), combinations(small, beta)):
            places = first + second
            key = frozenset(places)
            if len(key) < len(places) or key in seen:
                continue
            seen.add(key)
            yield Modulus.from_factors(field_spec, [(p, 1) for p in places], check=False)

    return islice(generate(), cfg.max_conductors)


def search_pointless(cfg: SearchConfig, l: int, m: int, alpha: int, beta: int,
                     progress: bool = False) -> SearchResult:
    """
    First extension with B0 trivial over the generated conductors that has
    no places of degree < cfg.n

    At most cfg.max_extensions extensions are verified in total.
    """
    started = time.perf_counter()
    result = SearchResult(cfg.n, (l, m), (alpha, beta))
    budget = cfg.max_extensions

    used = sorted({degree for degree, count in ((m, alpha), (l, beta)) if count > 0})
    for degree in used:
        if degree >= 3 and isprime(degree):
            report = euler_lemma_check(cfg.q, degree, cfg.c_q)
            result.prime_factor_checks.append(report)
            logger.debug(f"Prime factors of (q^{degree} - 1)/(q - 1): {report.factors}")

    for modulus in conductors(cfg, l, m, alpha, beta):
        result.conductors_tried.append(modulus)
        group = ray_class_group(modulus, cfg.seed)
        group.check_enumerable()
        subgroup = group.relations
        logger.info(f"Conductor {modulus}: |H| = {group.order}")

        twists = islice(subgroup.coset_representatives(), budget - result.extensions_tried)
        for u in tqdm(twists, desc=f"Twists mod {modulus}", total=min(group.order, budget),
                      disable=not progress):
            result.extensions_tried += 1
            extension = GeometricExtension(group, subgroup, tuple(u))
            report = verify_pointless(extension, cfg.n, threads=cfg.threads, compute_genus=False)
            if report.verdict:
                report.genus = genus(extension)
                result.report = report
                result.elapsed = time.perf_counter() - started
                logger.info(f"Found pointless extension of degree {extension.degree} mod {modulus}")
                return result
        if result.extensions_tried >= budget:
            logger.warning(f"Extension budget {budget} exhausted")
            break

    result.elapsed = time.perf_counter() - started
    logger.info(f"No pointless extension after {result.extensions_tried} extension(s)")
    return result
