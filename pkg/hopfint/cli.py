"""CLI entry point.

  hopfint catalog NAME      — write a catalog Hopf algebra as canonical JSON
  hopfint verify FILE       — check the Hopf axioms, one row per axiom
  hopfint integrals FILE    — basis of the left or right integrals
  hopfint gamma FILE        — the distinguished group-like element
  hopfint antipode FILE     — bijectivity and order of the antipode
  hopfint comodule FILE     — export a catalog comodule of an algebra
  hopfint check FILE --iso  — run one group of certified checks
  hopfint suite FILE        — run every check and print the report
  hopfint config            — show or change persistent settings

JSON goes to stdout, the human summary to stderr. Exit codes: 0 all checks
pass, 1 a check failed or was inconclusive, 2 invalid input.
"""
import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path

import click

from hopfint import settings


# ── CLI group ─────────────────────────────────────────────────────────────────

@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log library debug output to stderr.")
def cli(verbose: bool):
    """hopfint — exact integrals, group-likes and comodule functors of finite-dimensional Hopf algebras."""
    if verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format="%(asctime)s %(name)s: %(message)s")


# ── catalog ───────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("name", type=click.Choice(["group", "dualgroup", "sweedler4", "taft"]))
@click.option("--order", type=int, help="Cyclic group of this order.")
@click.option("--symmetric", type=int, help="Symmetric group S_n.")
@click.option("--table", "table_path", type=click.Path(dir_okay=False),
              help="JSON file holding a Cayley table (list of rows).")
@click.option("--field", "field_kind", type=click.Choice(["Q", "Fp"]), default=None,
              help="Ground field; --p alone implies Fp.")
@click.option("--p", type=int, help="Prime for Fp.")
@click.option("--n", type=int, default=None, help="Taft parameter n.")
@click.option("--q", default=None, help="Taft root of unity (a residue or fraction).")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def catalog(name, order, symmetric, table_path, field_kind, p, n, q, output):
    """Write a catalog Hopf algebra as a canonical JSON document."""
    from hopfint import catalog as cat, storage

    with _input_errors():
        field = _field(field_kind, p)
        if name in ("group", "dualgroup"):
            table = _table(order, symmetric, table_path)
            build = cat.group_algebra if name == "group" else cat.dual_group_algebra
            h = build(table, field)
        elif name == "sweedler4":
            h = cat.sweedler4(field)
        else:
            if n is None or q is None:
                _fail("taft needs --n and --q")
            h = cat.taft(n, field, q)
        _emit(storage.hopf_to_document(h), output)
    click.echo(click.style(f"  ✓ {h.label}: dimension {h.dim} over {h.field}", fg="green"), err=True)


# ── verify ────────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
def verify(file: str):
    """Check the Hopf algebra axioms."""
    from hopfint import storage

    with _input_errors():
        h = storage.read_hopf(Path(file), verify=False)
    report = h.verification
    for axiom, ok in report.flags().items():
        _row(axiom, ok)
    click.echo(json.dumps(report.to_dict(), indent=2))
    if not report.ok:
        click.echo(click.style(f"  {report.diagnostic()}", fg="red"), err=True)
        sys.exit(2)


# ── integrals / gamma / antipode ──────────────────────────────────────────────

@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--side", type=click.Choice(["left", "right"]), default="right", show_default=True)
def integrals(file: str, side: str):
    """Print a basis of the left or right integrals."""
    from hopfint.integrals import integral_space

    h = _load(file)
    with _input_errors():
        space = integral_space(h, side)
    basis = [h.field.format_array(v) for v in space.basis]
    _row(f"{side} integrals", space.dim == 1, f"dimension {space.dim}")
    click.echo(json.dumps({"side": side, "dim": space.dim, "basis": basis}, indent=2,
                          ensure_ascii=False))


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
def gamma(file: str):
    """Print the distinguished group-like element γ."""
    from hopfint.integrals import distinguished_grouplike, is_cosemisimple

    h = _load(file)
    with _input_errors():
        g = distinguished_grouplike(h)
        doc = {
            "gamma": g.describe(),
            "coordinates": h.field.format_array(g.coords),
            "grouplike": True,
            "unimodular": g.is_unit(),
            "cosemisimple": is_cosemisimple(h),
        }
    _row("γ group-like", True, doc["gamma"])
    click.echo(json.dumps(doc, indent=2, ensure_ascii=False))


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
def antipode(file: str):
    """Report bijectivity and the order of the antipode."""
    from hopfint.integrals import antipode_check

    h = _load(file)
    report = antipode_check(h, settings.get("order_bound_factor"))
    _row("antipode bijective", report.bijective)
    _row("antipode order", report.order_found, report.order)
    click.echo(json.dumps(report.to_dict(), indent=2))
    if not report.ok:
        sys.exit(1)


# ── comodule ──────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--kind", type=click.Choice(["trivial", "regular", "gamma", "dual-regular"]),
              default="regular", show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write here instead of stdout.")
def comodule(file: str, kind: str, output: str | None):
    """Export one of the standard comodules of an algebra."""
    from hopfint import comodules, storage
    from hopfint.integrals import gamma_comodule

    h = _load(file)
    with _input_errors():
        if kind == "trivial":
            m = comodules.trivial_comodule(h)
        elif kind == "regular":
            m = comodules.regular_comodule(h)
        elif kind == "gamma":
            m = gamma_comodule(h)
        else:
            m = comodules.dual_comodule(comodules.regular_comodule(h))
        _emit(storage.comodule_to_document(m), output)
    _row(f"comodule {m.label}", comodules.verify_comodule(m).ok, f"dimension {m.dim}")


# ── check / suite ─────────────────────────────────────────────────────────────

@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--iso", "group", required=True,
              type=click.Choice(["doi", "free_hom", "sweedler", "twist", "adjunction", "snake", "internal_hom"]),
              help="Which isomorphism family to certify.")
@click.option("--seed", type=int, default=None, help="Seed for the certificate search.")
def check(file: str, group: str, seed: int | None):
    """Run one family of certified isomorphism checks."""
    from hopfint.suite import single_check

    h = _load(file)
    report = single_check(h, group, _options(seed, None))
    _finish(report)


@cli.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--seed", type=int, default=None, help="Seed for the certificate search.")
@click.option("--jobs", type=int, default=None, help="Worker threads for independent checks.")
def suite(file: str, seed: int | None, jobs: int | None):
    """Run the full battery of checks and print the JSON report."""
    from hopfint.suite import run_suite

    h = _load(file)
    report = run_suite(h, _options(seed, jobs))
    _finish(report)


# ── config ────────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("key", required=False)
@click.argument("value", required=False)
def config(key: str | None, value: str | None):
    """Show settings, or store KEY VALUE."""
    if key is None:
        click.echo(json.dumps(settings.load(), indent=2))
        return
    if value is None:
        if key not in settings.known_keys():
            _fail(f"unknown setting {key!r}")
        click.echo(json.dumps(settings.get(key)))
        return
    try:
        parsed = json.loads(value)
    except json.JSONDecodeError:
        parsed = value
    with _input_errors():
        settings.put(key, parsed)
    click.echo(click.style(f"  ✓ {key} = {parsed}", fg="green"), err=True)


# ── helpers ───────────────────────────────────────────────────────────────────

def _row(label: str, ok: bool, detail: str = "", status: str | None = None, indent: int = 2):
    mark = click.style("✓", fg="green") if ok else click.style("✗", fg="red")
    status = status or ("ok" if ok else "fail")
    colour = {"ok": "green", "pass": "green", "inconclusive": "yellow"}.get(status, "red")
    pad = " " * indent
    click.echo(f"{pad}{mark} {label:<30} {click.style(status, fg=colour)}  {detail}", err=True)


def _fail(message: str):
    click.echo(click.style(f"  ✗ {message}", fg="red"), err=True)
    sys.exit(2)


@contextmanager
def _input_errors():
    from hopfint.errors import HopfVerificationError, InvalidInput

    try:
        yield
    except HopfVerificationError as e:
        for axiom, ok in e.report.flags().items():
            _row(axiom, ok)
        _fail(str(e))
    except InvalidInput as e:
        _fail(str(e))


def _load(file: str):
    from hopfint import storage

    with _input_errors():
        return storage.read_hopf(Path(file))


def _field(kind: str | None, p: int | None):
    from hopfint.exactla import Field

    if p is not None and kind in (None, "Fp"):
        return Field.prime(p)
    if kind == "Fp":
        _fail("--field Fp needs --p")
    if p is not None:
        _fail("--p cannot be combined with --field Q")
    return Field.rationals()


def _table(order: int | None, symmetric: int | None, table_path: str | None):
    from hopfint import catalog as cat, storage

    given = [x is not None for x in (order, symmetric, table_path)]
    if sum(given) != 1:
        _fail("give exactly one of --order, --symmetric, --table")
    if order is not None:
        return cat.cyclic_table(order)
    if symmetric is not None:
        return cat.symmetric_table(symmetric)
    return storage.read_document(Path(table_path))


def _emit(doc: dict, output: str | None):
    from hopfint import storage

    if output:
        storage.write_document(Path(output), doc)
    else:
        click.echo(storage.dumps(doc), nl=False)


def _options(seed: int | None, jobs: int | None):
    from hopfint.suite import SuiteOptions

    s = settings.load()
    return SuiteOptions(
        seed=seed if seed is not None else s["seed"],
        iso_attempts=s["iso_attempts"],
        order_bound_factor=s["order_bound_factor"],
        battery_dim_limit=s["battery_dim_limit"],
        jobs=max(1, jobs if jobs is not None else s["jobs"]),
    )


def _finish(report):
    for record in report.records:
        _row(record.check, record.status == "pass", status=record.status)
    counts = report.counts()
    click.echo(f"\n  {counts['pass']} passed, {counts['fail']} failed, "
               f"{counts['inconclusive']} inconclusive", err=True)
    click.echo(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    sys.exit(report.exit_code)
