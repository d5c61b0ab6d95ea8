import functools
import logging
import sys
from typing import List, Optional

import click
from tabulate import tabulate

from config import Config
from ..exceptions import PointlessError
from ..gfpoly import (
    FieldSpec,
    Place,
    count_irreducibles,
    enumerate_monic_irreducibles,
    parse_poly,
    render_poly,
)
from ..rayclass import (
    SplitPlaceSpec,
    enumerate_extensions,
    full_rayclass_degree,
    genus,
    genus_full_rayclass,
    genus_full_rayclass_literal,
    split_count_census,
)
from ..search import (
    SearchConfig,
    bounds,
    find_table_extension,
    load_table,
    search_pointless,
    select_parameters,
    select_rows,
    to_json,
    verify_pointless,
    verify_table_row,
)
from ..search.reports import mapping_grid, report_grid, table_results_grid, tallies_grid
from ..unitgroup import Modulus

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

logger = logging.getLogger(__name__)


def _int_list(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of integers, got {text!r}")


def _field(q: int) -> FieldSpec:
    try:
        return FieldSpec.from_order(q)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--q")


def _emit(ctx, data: dict, human: str):
    if ctx.obj["json"]:
        click.echo(to_json(data))
    else:
        click.echo(human)


def handle_errors(command):
    """Library errors become a message on stderr and exit status 2"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except PointlessError as e:
            token = getattr(e, "token", None)
            suffix = f" (offending input: {token!r})" if token else ""
            click.echo(f"❌ {e}{suffix}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


@click.group()
@click.option('--json', 'as_json', is_flag=True, help='Print reports as JSON')
@click.option('--hex', 'use_hex', is_flag=True, help='Print F_2 polynomials as hex bit strings')
@click.option('--threads', default=1, type=click.IntRange(min=1), help='Worker processes for place scans')
@click.option('--seed', default=None, type=int, help='Seed for generator sampling')
@click.option('--timings', is_flag=True, help='Include wall-clock timings in JSON reports')
@click.option('--debug', is_flag=True, help='Enable debug logging')
@click.pass_context
def cli(ctx, as_json, use_hex, threads, seed, timings, debug):
    """Pointless curves over F_q(x) from ray class fields"""
    level = logging.DEBUG if debug else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    if debug:
        logging.getLogger().setLevel(logging.DEBUG)
    if seed is not None:
        Config.SEED = seed
    ctx.ensure_object(dict)
    ctx.obj.update({"json": as_json, "hex": use_hex, "threads": threads, "timings": timings})


@cli.command()
@click.option('--rows', default=None, help='Comma-separated n values, e.g. 1,2,3')
@click.option('--deep', is_flag=True, help=f'Include rows with n >= {Config.DEEP_FROM}')
@click.option('--fixture', default=None, type=click.Path(exists=True, dir_okay=False),
              help='Table fixture (defaults to POINTLESS_FIXTURES)')
@click.pass_context
@handle_errors
def verify_table(ctx, rows, deep, fixture):
    """Reconstruct and verify rows of the table of pointless curves over F_2"""
    entries = select_rows(load_table(fixture), _int_list(rows), deep)
    row_set = [e.n for e in entries]
    if not ctx.obj["json"]:
        click.echo(f"📋 Rows: {', '.join(str(n) for n in row_set)}")

    results = []
    for entry in entries:
        result = verify_table_row(entry, threads=ctx.obj["threads"], progress=not ctx.obj["json"])
        results.append(result)
        if not ctx.obj["json"]:
            icon = {"PASS": "✅", "ERRATUM": "⚠️", "FAIL": "❌"}[result.status]
            click.echo(f"{icon} {result.status} n={entry.n} d={entry.d} g={entry.g} "
                       f"(computed {result.genera or '-'})")
            if not result.passed:
                click.echo(f"   pointless only through n={result.pointless_through}")

    passed = all(r.accepted for r in results)
    if ctx.obj["json"]:
        click.echo(to_json({
            "rows": row_set,
            "results": [r.to_dict(ctx.obj["hex"], ctx.obj["timings"]) for r in results],
            "passed": passed,
        }))
    else:
        click.echo(table_results_grid(results))
        mismatched = [r.entry.n for r in results if r.passed and not r.genus_match]
        if mismatched:
            click.echo(f"💡 Printed genus differs from every computed genus for n = {mismatched}")
    sys.exit(EXIT_OK if passed else EXIT_FAILED)


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='Field order')
@click.option('--n', 'n', required=True, type=click.IntRange(min=1), help='No places of degree < n')
@click.option('--modulus', required=True, help='Conductor, e.g. "(x^3+x+1)^2"')
@click.option('--degree', required=True, type=click.IntRange(min=1), help='Extension degree d')
@click.option('--split-place', required=True, help='Place S that splits completely')
@click.pass_context
@handle_errors
def verify(ctx, q, n, modulus, degree, split_place):
    """Verify the extensions of degree d mod m with S split"""
    field_spec = _field(q)
    m = Modulus.parse(field_spec, modulus)
    place = Place.finite(parse_poly(field_spec, split_place))
    candidates = find_table_extension(m, degree, place)

    reports = [verify_pointless(ext, n, threads=ctx.obj["threads"]) for ext in candidates]
    passed = any(r.verdict for r in reports)
    if ctx.obj["json"]:
        click.echo(to_json({
            "candidates": len(candidates),
            "passed": passed,
            "reports": [r.to_dict(ctx.obj["hex"], ctx.obj["timings"]) for r in reports],
        }))
    else:
        click.echo(f"🔎 {len(candidates)} candidate extension(s) of degree {degree} mod {m.to_text(ctx.obj['hex'])}")
        for report in reports:
            click.echo(report_grid(report, ctx.obj["hex"]))
        shown = next((r for r in reports if r.verdict), reports[0])
        click.echo(tallies_grid(shown))
        click.echo("✅ Pointless" if passed else "❌ Every candidate has a place of degree < n")
    sys.exit(EXIT_OK if passed else EXIT_FAILED)


@cli.command(name="genus")
@click.option('--q', 'q', required=True, type=int, help='Field order')
@click.option('--modulus', required=True, help='Conductor')
@click.option('--degree', default=None, type=click.IntRange(min=1), help='Genera of all degree-d extensions')
@click.option('--split-place', default=None, help='Genus of the full ray class field with S split')
@click.pass_context
@handle_errors
def genus_command(ctx, q, modulus, degree, split_place):
    """Genus of the ray class field mod m, or of its degree-d subextensions"""
    if (degree is None) == (split_place is None):
        raise click.UsageError("Give exactly one of --degree and --split-place")
    field_spec = _field(q)
    m = Modulus.parse(field_spec, modulus)

    if split_place is not None:
        split = SplitPlaceSpec(Place.finite(parse_poly(field_spec, split_place)))
        value = genus_full_rayclass(m, split)
        data = {
            "modulus": m.to_text(ctx.obj["hex"]),
            "split_place": render_poly(split.place.poly, ctx.obj["hex"]),
            "degree": full_rayclass_degree(m, split),
            "genus": value,
            "literal_form": str(genus_full_rayclass_literal(m, split)),
        }
        _emit(ctx, data, str(value))
        return

    counts = {}
    for extension in enumerate_extensions(m, degree):
        g = genus(extension)
        counts[g] = counts.get(g, 0) + 1
    data = {
        "modulus": m.to_text(ctx.obj["hex"]),
        "degree": degree,
        "genera": {str(g): c for g, c in sorted(counts.items())},
    }
    rows = [[g, c] for g, c in sorted(counts.items())]
    _emit(ctx, data, tabulate(rows, headers=['Genus', 'Extensions'], tablefmt='grid'))


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='Field order')
@click.option('--n', 'n', required=True, type=click.IntRange(min=2), help='Target degree')
@click.pass_context
@handle_errors
def params(ctx, q, n):
    """Select prime degrees l < m < 2l and exponents alpha, beta for n"""
    selection = select_parameters(SearchConfig(_field(q), n))
    data = selection.to_dict()
    _emit(ctx, data, mapping_grid(data))
    if selection.large_exponent:
        logger.warning(f"alpha or beta exceeds C1 * n / log_q n for n={n}")


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='Field order')
@click.option('--deg', 'deg', required=True, type=click.IntRange(min=1), help='Degree')
@click.option('--count-only', is_flag=True, help='Only print the number of monic irreducibles')
@click.pass_context
@handle_errors
def irreducibles(ctx, q, deg, count_only):
    """Monic irreducible polynomials of a given degree, in enumeration order"""
    field_spec = _field(q)
    if count_only:
        count = count_irreducibles(field_spec, deg)
        _emit(ctx, {"q": q, "deg": deg, "count": count}, str(count))
        return
    polys = [render_poly(p, ctx.obj["hex"]) for p in enumerate_monic_irreducibles(field_spec, deg)]
    _emit(ctx, {"q": q, "deg": deg, "irreducibles": polys}, "\n".join(polys))


@cli.command(name="bounds")
@click.option('--q', 'q', required=True, type=int, help='Field order')
@click.option('--n', 'n', required=True, type=click.IntRange(min=1), help='No places of degree < n')
@click.option('--genus', 'g', required=True, type=click.IntRange(min=0), help='Genus to check')
@click.pass_context
@handle_errors
def bounds_command(ctx, q, n, g):
    """Weil floor and growth ratios for a curve without places of degree < n"""
    report = bounds(_field(q), n, g)
    data = report.to_dict()
    _emit(ctx, data, mapping_grid(data))
    sys.exit(EXIT_OK if report.weil_ok else EXIT_FAILED)


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='Field order')
@click.option('--modulus', required=True, help='Conductor with cyclic class group')
@click.option('--place-degree', required=True, type=click.IntRange(min=1), help='Degree of the places to census')
@click.pass_context
@handle_errors
def census(ctx, q, modulus, place_degree):
    """Count extensions in which each place of a given degree splits completely"""
    record = split_count_census(Modulus.parse(_field(q), modulus), place_degree)
    rows = [[p.place, p.split_count, p.split_bound, "✅" if p.holds else "❌"] for p in record.places]
    data = {
        "modulus": record.modulus,
        "d": record.d,
        "place_degree": record.place_degree,
        "max_split": record.max_split,
        "holds": record.holds,
        "places": [
            {
                "place": p.place,
                "split_count": p.split_count,
                "split_bound": p.split_bound,
                "holds": p.holds,
            }
            for p in record.places
        ],
    }
    _emit(ctx, data, tabulate(rows, headers=['Place', 'Split in', 'Bound', 'Holds'], tablefmt='grid'))
    sys.exit(EXIT_OK if record.holds else EXIT_FAILED)


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='Field order')
@click.option('--n', 'n', required=True, type=click.IntRange(min=1), help='No places of degree < n')
@click.option('--degrees', required=True, help='Place degrees "L,M"')
@click.option('--alpha', default=1, type=click.IntRange(min=0), help='Places of degree M')
@click.option('--beta', default=1, type=click.IntRange(min=0), help='Places of degree L')
@click.option('--max-conductors', default=4, type=click.IntRange(min=1), help='Conductors to try')
@click.option('--max-extensions', default=10_000, type=click.IntRange(min=1), help='Extensions to verify')
@click.pass_context
@handle_errors
def search(ctx, q, n, degrees, alpha, beta, max_conductors, max_extensions):
    """Search conductors built from places of degrees L and M for a pointless curve"""
    values = _int_list(degrees)
    if len(values) != 2:
        raise click.BadParameter(f"expected two degrees L,M, got {degrees!r}", param_hint="--degrees")
    l, m = values
    cfg = SearchConfig(_field(q), n, max_conductors=max_conductors, max_extensions=max_extensions,
                       threads=ctx.obj["threads"])
    result = search_pointless(cfg, l, m, alpha, beta, progress=not ctx.obj["json"])
    if ctx.obj["json"]:
        click.echo(to_json(result.to_dict(ctx.obj["hex"], ctx.obj["timings"])))
    elif result.found:
        click.echo(report_grid(result.report, ctx.obj["hex"]))
        click.echo(f"✅ Found after {result.extensions_tried} extension(s)")
    else:
        click.echo(f"❌ Nothing pointless among {result.extensions_tried} extension(s) "
                   f"over {len(result.conductors_tried)} conductor(s)")
    sys.exit(EXIT_OK if result.found else EXIT_FAILED)
