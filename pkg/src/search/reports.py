"""
Report rendering: canonical JSON and tabulate grids
"""

import json
from typing import Sequence

from tabulate import tabulate

from .table import TableRowResult
from .verify import PointlessReport


def to_json(data) -> str:
    """Sorted keys, fixed indentation: identical inputs give identical bytes"""
    return json.dumps(data, sort_keys=True, indent=2)


def table_results_grid(results: Sequence[TableRowResult]) -> str:
    rows = []
    for result in results:
        entry = result.entry
        rows.append([
            entry.n,
            entry.g,
            entry.d_text,
            entry.modulus_text,
            result.candidates,
            len(result.pointless),
            ", ".join(str(g) for g in result.genera) or "-",
            "yes" if result.genus_match else "no",
            result.status,
        ])
    headers = ['n', 'g', 'd', 'Modulus', 'Candidates', 'Pointless', 'Genera', 'Genus match', 'Status']
    return tabulate(rows, headers=headers, tablefmt='grid')


def report_grid(report: PointlessReport, use_hex: bool = False) -> str:
    data = report.to_dict(use_hex)
    witness = data["witness"]
    rows = [
        ['Modulus', data["modulus"]],
        ['Degree', data["degree"]],
        ['B0 generators', ", ".join(data["B0"]) or "-"],
        ['u', data["u"]],
        ['Genus', data["genus"] if data["genus"] is not None else "-"],
        ['n', data["n"]],
        ['Pointless', data["verdict"]],
        ['Witness', f"{witness['place']} (deg {witness['degree']}, f={witness['f']})" if witness else "-"],
        ['Places scanned', data["places_scanned"]],
    ]
    return tabulate(rows, tablefmt='grid')


def tallies_grid(report: PointlessReport) -> str:
    rows = [[t, best] for t, best in sorted(report.tallies.items())]
    return tabulate(rows, headers=['Place degree', 'Min deg*f'], tablefmt='grid')


def mapping_grid(data: dict) -> str:
    rows = [[key, value] for key, value in data.items()]
    return tabulate(rows, tablefmt='grid')
