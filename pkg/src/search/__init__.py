# Pointlessness search and verification package
from .search_config import SearchConfig
from .verify import PointlessReport, Witness, min_residue_degree, scan_degree, verify_pointless
from .table import (
    TableEntry,
    TableRowResult,
    find_table_extension,
    load_table,
    parse_table_line,
    select_rows,
    verify_table_row,
)
from .params import ParameterSelection, farey_neighbor, satisfies_inequality, select_parameters
from .lemmas import BoundsReport, EulerLemmaReport, bounds, euler_lemma_check, weil_floor
from .driver import SearchResult, conductors, search_pointless
from .reports import to_json
