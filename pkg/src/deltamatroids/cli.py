"""Command-line front end.

Subcommand tree: ss, graph, chord, ribbon, hopf, inv.  Input files use
the text formats of ``deltamatroids.formats``.  Exit codes: 0 success,
2 parse/usage error, 3 domain error, 4 verification failure.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import click

from . import core, f2, formats, graphs, hopf, invariants, moves, ribbon
from .errors import DeltaMatroidError, ParseError

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4


class VerificationFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(0, f"cannot read {path}: {exc}") from None


def _load_ss(path: str) -> core.SetSystem:
    return formats.parse_set_system(_read(path))


def _load_matrix(path: str):
    return formats.parse_f2_matrix(_read(path))


def _echo_ss(s: core.SetSystem):
    click.echo(formats.emit_set_system(s), nl=False)


def _fraction(value: str) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"expected a rational like 3 or -1/2, got {value!r}")


def _hex_mask(value: str) -> int:
    try:
        return int(value, 16)
    except ValueError:
        raise click.BadParameter(f"expected a hex mask, got {value!r}")


@click.group()
def cli():
    """Delta-matroid toolbox: set systems, ribbon graphs, moves, Hopf data."""


@cli.group()
def ss():
    """Set-system predicates and transforms (elements are 0-based)."""


@ss.command("check")
@click.argument("file", type=click.Path())
def ss_check(file):
    """Print proper/delta-matroid/even/binary/empty-feasible as true|false."""
    s = _load_ss(file)
    lines = [
        ("proper", True),
        ("delta-matroid", core.is_delta_matroid(s)),
        ("even", core.is_even(s)),
        ("binary", graphs.is_binary(s)),
        ("empty-feasible", s.member(0)),
    ]
    for name, value in lines:
        click.echo(f"{name} {'true' if value else 'false'}")


@ss.command("twist")
@click.argument("file", type=click.Path())
@click.option("--mask", required=True, help="hex subset mask")
def ss_twist(file, mask):
    _echo_ss(core.twist(_load_ss(file), _hex_mask(mask)))


@ss.command("slide")
@click.argument("file", type=click.Path())
@click.option("-a", type=int, required=True)
@click.option("-b", type=int, required=True)
def ss_slide(file, a, b):
    _echo_ss(moves.slide(_load_ss(file), a, b))


@ss.command("exchange")
@click.argument("file", type=click.Path())
@click.option("-a", type=int, required=True)
@click.option("-b", type=int, required=True)
def ss_exchange(file, a, b):
    _echo_ss(moves.exchange(_load_ss(file), a, b))


@ss.command("fourterm")
@click.argument("file", type=click.Path())
@click.option("-a", type=int, required=True)
@click.option("-b", type=int, required=True)
@click.option(
    "--require-binary/--no-require-binary",
    default=False,
    help="reject non-binary inputs (off for exploratory use)",
)
def ss_fourterm(file, a, b, require_binary):
    """Print the four signed blocks (+1, -1, -1, +1) of the combination."""
    ft = moves.four_term(_load_ss(file), a, b, require_binary=require_binary)
    for coeff, term in ft.terms:
        click.echo(f"{coeff:+d}")
        _echo_ss(term)


@ss.command("product")
@click.argument("file1", type=click.Path())
@click.argument("file2", type=click.Path())
def ss_product(file1, file2):
    _echo_ss(core.product(_load_ss(file1), _load_ss(file2)))


@ss.command("restrict")
@click.argument("file", type=click.Path())
@click.option("--mask", required=True, help="hex mask of elements to keep")
def ss_restrict(file, mask):
    _echo_ss(core.restrict(_load_ss(file), _hex_mask(mask)))


@ss.command("delete")
@click.argument("file", type=click.Path())
@click.option("-e", type=int, required=True)
def ss_delete(file, e):
    _echo_ss(core.delete(_load_ss(file), e))


@ss.command("contract")
@click.argument("file", type=click.Path())
@click.option("-e", type=int, required=True)
def ss_contract(file, e):
    _echo_ss(core.contract(_load_ss(file), e))


@ss.command("canon")
@click.argument("file", type=click.Path())
def ss_canon(file):
    """Isomorphism-canonical representative."""
    _echo_ss(core.canonical_form(_load_ss(file)).to_set_system())


@cli.group()
def graph():
    """Framed graphs given as symmetric f2matrix files."""


@graph.command("dm")
@click.argument("file", type=click.Path())
def graph_dm(file):
    """Nondegeneracy delta-matroid of a framed graph."""
    g = graphs.FramedGraph(_load_matrix(file))
    _echo_ss(graphs.nondeg_delta_matroid(g))


@graph.command("slide")
@click.argument("file", type=click.Path())
@click.option("-a", type=int, required=True)
@click.option("-b", type=int, required=True)
def graph_slide_cmd(file, a, b):
    g = graphs.FramedGraph(_load_matrix(file))
    click.echo(formats.emit_f2_matrix(graphs.graph_slide(g, a, b).adj), nl=False)


@graph.command("recognize")
@click.argument("file", type=click.Path())
def graph_recognize(file):
    """Binary recognizer: twist set and framed-graph witness, or 'binary false'."""
    witness = graphs.recognize_binary(_load_ss(file))
    if witness is None:
        click.echo("binary false")
        return
    click.echo("binary true")
    click.echo(f"twist {witness.twist_set:#x}")
    click.echo(formats.emit_f2_matrix(witness.graph.adj), nl=False)


@cli.group()
def chord():
    """Chord diagrams given as 'chords:'/'signs:' files."""


@chord.command("igraph")
@click.argument("file", type=click.Path())
def chord_igraph(file):
    """Framed intersection graph of a chord diagram."""
    c = formats.parse_chords(_read(file))
    click.echo(formats.emit_f2_matrix(ribbon.intersection_graph(c).adj), nl=False)


@chord.command("dm")
@click.argument("file", type=click.Path())
def chord_dm(file):
    _echo_ss(ribbon.chord_delta_matroid(formats.parse_chords(_read(file))))


@chord.command("slide")
@click.argument("file", type=click.Path())
@click.option("-a", "label_a", required=True, help="chord to slide")
@click.option("-b", "label_b", required=True, help="chord to slide over")
@click.option("--end", type=click.IntRange(0, 1), default=0, show_default=True)
def chord_slide_cmd(file, label_a, label_b, end):
    c = formats.parse_chords(_read(file))
    try:
        a = c.labels.index(label_a)
        b = c.labels.index(label_b)
    except ValueError as exc:
        raise ParseError(1, f"unknown chord label: {exc}") from None
    slid, _ = ribbon.chord_slide(c, a, b, which_end=end)
    click.echo(formats.emit_chords(slid), nl=False)


@cli.group(name="ribbon")
def ribbon_group():
    """Ribbon graphs given as rotation-system files."""


@ribbon_group.command("dm")
@click.argument("file", type=click.Path())
def ribbon_dm(file):
    """Quasi-tree delta-matroid of a connected ribbon graph."""
    _echo_ss(ribbon.ribbon_delta_matroid(formats.parse_ribbon(_read(file))))


@ribbon_group.command("boundary")
@click.argument("file", type=click.Path())
@click.option("--edges", required=True, help="hex mask of selected edges")
def ribbon_boundary(file, edges):
    r = formats.parse_ribbon(_read(file))
    click.echo(str(ribbon.boundary_components(r, _hex_mask(edges))))


@cli.group(name="hopf")
def hopf_group():
    """Graded dimensions and the reference table."""


@hopf_group.command("dims")
@click.option(
    "--flavor",
    required=True,
    type=click.Choice(hopf.PLAIN_FLAVORS + hopf.QUOTIENT_FLAVORS),
)
@click.option("--degree", type=int, required=True)
@click.option(
    "--what",
    required=True,
    type=click.Choice(
        ["basis", "primitive", "decomposable", "quotient", "quotient-primitive"]
    ),
)
def hopf_dims(flavor, degree, what):
    """Print one integer for the requested dimension."""
    if what == "basis":
        value = len(hopf.enumerate_basis(flavor, degree))
    elif what == "primitive":
        value = hopf.primitive_dim(flavor, degree)
    elif what == "decomposable":
        value = hopf.decomposable_dim(flavor, degree)
    elif what == "quotient":
        value = hopf.four_term_quotient(flavor, degree)[0]
    else:
        value = hopf.quotient_primitive_dim(flavor, degree)
    click.echo(str(value))


@hopf_group.command("table1")
def hopf_table1():
    """Primitive-dimension table at degrees 1-2 with PASS/FAIL markers."""
    report = hopf.table1_report()
    click.echo(report.format())
    if not report.passed:
        raise VerificationFailure("table mismatch")


@cli.group(name="inv")
def inv_group():
    """Recursion invariants and the full-set weight."""


@inv_group.command("tutte")
@click.argument("file", type=click.Path())
@click.option("-x", required=True)
@click.option("-y", required=True)
@click.option("-z", required=True)
@click.option("-w", required=True)
@click.option("--audit", is_flag=True, help="compare all pivot orders")
@click.option(
    "--pivot",
    type=click.Choice(["lowest", "highest"]),
    default="lowest",
    show_default=True,
)
def inv_tutte(file, x, y, z, w, audit, pivot):
    s = _load_ss(file)
    p = invariants.TutteParams(_fraction(x), _fraction(y), _fraction(z), _fraction(w))
    result = invariants.tutte_eval_ordered(s, p, pivot=pivot, audit=audit)
    click.echo(str(result.value))
    if audit:
        click.echo(
            "order-independent" if result.order_independent else "order-dependent"
        )


@inv_group.command("solve")
@click.option("--n", "n_max", type=int, required=True)
@click.option("-x", required=True)
@click.option("-y", required=True)
@click.option("-z", required=True)
@click.option("-w", required=True)
def inv_solve(n_max, x, y, z, w):
    """Solution space of the recursion constraints: dimension plus values."""
    p = invariants.TutteParams(_fraction(x), _fraction(y), _fraction(z), _fraction(w))
    sol = invariants.tutte_solve(n_max, p)
    if sol is None:
        click.echo("infeasible")
        return
    click.echo(f"dimension {sol.dimension}")
    fn = sol.functionals()[0]
    for d in range(n_max + 1):
        for code in hopf.enumerate_basis("B", d).codes:
            rep = code.to_set_system()
            phi = ",".join(f"{m:#x}" for m in rep.masks)
            click.echo(f"n={d} phi={phi} value={fn(code)}")
    for k, gen in enumerate(sol.homogeneous):
        terms = " ".join(
            f"{code.n}:{code.code:#x}={coeff}" for code, coeff in sorted(gen.items())
        )
        click.echo(f"kernel {k}: {terms}")


@inv_group.command("conway")
@click.argument("file", type=click.Path())
def inv_conway(file):
    click.echo(str(invariants.conway_w(_load_ss(file))))


@inv_group.command("logwc")
@click.option("--degree", "n_max", type=int, required=True)
def inv_logwc(n_max):
    """Values of log of the full-set weight on every class up to the degree."""
    log_fn = invariants.convolution_log(invariants.conway_functional(n_max), n_max)
    for d in range(n_max + 1):
        for code in hopf.enumerate_basis("B", d).codes:
            rep = code.to_set_system()
            phi = ",".join(f"{m:#x}" for m in rep.masks)
            click.echo(f"n={d} phi={phi} value={log_fn(code)}")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except ParseError as exc:
        click.echo(f"parse error: {exc}", err=True)
        return EXIT_PARSE
    except (DeltaMatroidError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    except VerificationFailure as exc:
        click.echo(f"verification failure: {exc}", err=True)
        return EXIT_VERIFY
    except click.ClickException as exc:
        exc.show()
        return EXIT_PARSE
    except click.exceptions.Abort:
        return EXIT_PARSE
    return 0


if __name__ == "__main__":
    sys.exit(main())
