"""
Immaculate Hecke Toolkit - Command Line Interface
Exposed as `flask immaculate ...` and through run.py
"""
import logging
from typing import List, Optional

import click
from flask.cli import AppGroup
from pydantic import ValidationError

from app.models import (
    Composition, Tableau, HeckeWord, ModuleSpec, Command, ImmaculateError,
    DescentVariant, TableauClass, SpecialKind, IdentityTag, BasisFamily, OutputFormat
)
from app.services import (
    tableau_service, hecke_service, poset_service, qsym_service,
    genfun_service, module_service, OutputTemplates, FAMILIES
)
from app.services.hecke_service import TARGET_CLASS
from app.services.qsym_service import format_poly

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_MISMATCH = 2


class InvalidArgument(click.BadParameter):
    """A malformed argument; exits with the usage status"""
    exit_code = EXIT_USAGE


# ==========================================
# PARAMETER TYPES
# ==========================================

class ParsedType(click.ParamType):
    """Parse text through a model's parse() classmethod"""

    def __init__(self, name, model):
        self.name = name
        self.model = model

    def convert(self, value, param, ctx):
        if isinstance(value, self.model):
            return value
        try:
            return self.model.parse(value)
        except ImmaculateError as e:
            raise InvalidArgument(str(e), ctx=ctx, param=param)


class LowerChoice(click.Choice):
    """Case-insensitive choice returning the enum member"""

    def __init__(self, enum):
        self.enum = enum
        super().__init__([m.value for m in enum], case_sensitive=False)

    def convert(self, value, param, ctx):
        if isinstance(value, self.enum):
            return value
        try:
            return self.enum(super().convert(value, param, ctx))
        except click.BadParameter as e:
            raise InvalidArgument(e.message, ctx=ctx, param=param)


SHAPE = ParsedType('shape', Composition)
TABLEAU = ParsedType('tableau', Tableau)
WORD = ParsedType('word', HeckeWord)

format_option = click.option('--format', 'fmt', type=LowerChoice(OutputFormat),
                             default=OutputFormat.TEXT.value, show_default=True)
shape_option = click.option('--shape', type=SHAPE, required=True, help='Composition such as 2,2,3')


def _command(subcommand: str, **fields) -> Command:
    """Validate flags before computing anything"""
    try:
        return Command(subcommand=subcommand, **fields)
    except ValidationError as e:
        problem = e.errors()[0]
        raise InvalidArgument(f"{'.'.join(map(str, problem['loc']))}: {problem['msg']}")


def _run(func, *args, **kwargs):
    """Domain errors raised during computation become usage errors"""
    try:
        return func(*args, **kwargs)
    except ImmaculateError as e:
        raise InvalidArgument(str(e))


def _finish(ctx: click.Context, ok: bool):
    if not ok:
        ctx.exit(EXIT_MISMATCH)


cli = AppGroup('immaculate', help='Row-strict dual immaculate tableaux and their 0-Hecke modules.')


# ==========================================
# TABLEAUX
# ==========================================

@cli.command('enumerate')
@shape_option
@click.option('--class', 'cls', type=LowerChoice(TableauClass), default=TableauClass.SIT.value)
@format_option
def enumerate_command(shape, cls, fmt):
    """List the standard immaculate tableaux of a class"""
    request = _command('enumerate', shape=list(shape.parts), tableau_class=cls, format=fmt)
    items = _run(tableau_service.enumerate_standard, shape, request.tableau_class)
    click.echo(OutputTemplates.tableaux(items, request.format))


@cli.command('special')
@shape_option
@click.option('--kind', type=LowerChoice(SpecialKind), required=True)
@format_option
def special_command(shape, kind, fmt):
    """Print S0, Srow, Scol or Srowstar"""
    request = _command('special', shape=list(shape.parts), format=fmt)
    tableau = _run(tableau_service.special, shape, kind)
    click.echo(OutputTemplates.tableau(tableau, tableau_service.classify(tableau), request.format))


@cli.command('descents')
@click.option('--tableau', type=TABLEAU, required=True)
@click.option('--variant', type=LowerChoice(DescentVariant), default=None,
              help='One variant; all four when omitted')
@format_option
def descents_command(tableau, variant, fmt):
    """Descent sets of a standard immaculate tableau"""
    request = _command('descents', variant=variant, format=fmt)
    _run(tableau_service.classify, tableau)
    variants = [variant] if variant else list(DescentVariant)
    sets = {v.value: tableau_service.descent_set(tableau, v) for v in variants}
    if variant and request.format == OutputFormat.TEXT:
        click.echo(str(sets[variant.value]))
    else:
        click.echo(OutputTemplates.descents(sets, request.format))


@cli.command('act')
@click.option('--variant', type=LowerChoice(DescentVariant), required=True)
@click.option('--gen', type=int, default=None, help='Single generator index')
@click.option('--word', type=WORD, default=None, help='Space-separated generators, rightmost applied first')
@click.option('--tableau', type=TABLEAU, required=True)
@format_option
def act_command(variant, gen, word, tableau, fmt):
    """Apply pi_i (or a word) to a tableau"""
    request = _command('act', variant=variant, format=fmt)
    if (gen is None) == (word is None):
        raise InvalidArgument('Give exactly one of --gen and --word')
    _run(tableau_service.classify, tableau)
    if gen is not None:
        result = _run(hecke_service.apply_pi, variant, gen, tableau)
    else:
        result = _run(hecke_service.apply_word, variant, word, tableau)
    click.echo(OutputTemplates.action(result, request.format))


@cli.command('straighten')
@click.option('--tableau', type=TABLEAU, required=True)
@click.option('--target', type=LowerChoice(SpecialKind), required=True)
@format_option
def straighten_command(tableau, target, fmt):
    """Word connecting a tableau to S0, Srow, Scol or Srowstar"""
    request = _command('straighten', format=fmt)
    word = _run(hecke_service.straighten, tableau, target)
    click.echo(OutputTemplates.word(word, request.format))


# ==========================================
# POSET AND CHARACTERISTICS
# ==========================================

@cli.command('poset')
@shape_option
@format_option
def poset_command(shape, fmt):
    """The immaculate Hecke poset on SIT(shape)"""
    request = _command('poset', shape=list(shape.parts), format=fmt)
    poset = _run(poset_service.build_poset, shape)
    if request.format == OutputFormat.DOT:
        click.echo(poset_service.to_dot(poset), nl=False)
    elif request.format == OutputFormat.JSON:
        click.echo(poset_service.to_json(poset))
    else:
        bounds = _run(poset_service.check_bounds, poset)
        click.echo(f"vertices: {len(poset.vertices)}")
        click.echo(f"covers: {poset.graph.number_of_edges()}")
        click.echo(f"rank sizes: {','.join(map(str, poset.rank_sizes()))}")
        click.echo(f"min: {bounds.min}")
        click.echo(f"max: {bounds.max}")


@cli.command('expand')
@shape_option
@click.option('--variant', type=LowerChoice(DescentVariant), required=True)
@click.option('--class', 'cls', type=LowerChoice(TableauClass), default=TableauClass.SIT.value)
@click.option('--m', type=int, default=None, help='Also print the polynomial in m variables')
@format_option
def expand_command(shape, variant, cls, m, fmt):
    """Fundamental expansion of a characteristic"""
    request = _command('expand', shape=list(shape.parts), variant=variant,
                       tableau_class=cls, format=fmt, m=m)
    element = _run(qsym_service.characteristic, shape, request.variant, request.tableau_class)
    click.echo(OutputTemplates.qsym(element, request.format))
    if request.m is not None and request.format == OutputFormat.TEXT:
        click.echo(format_poly(qsym_service.specialize(element, request.m)))


@cli.command('verify')
@click.option('--identity', type=LowerChoice(IdentityTag), default=None)
@click.option('--genfun', is_flag=True, help='Compare generating functions with characteristics')
@click.option('--basis', type=LowerChoice(BasisFamily), default=None)
@click.option('--structure', is_flag=True, help='Hecke relations, descents, poset and straightening checks')
@click.option('--shape', type=SHAPE, default=None)
@click.option('--n', type=click.IntRange(min=1), default=None)
@click.option('--m', type=int, default=None)
@format_option
@click.pass_context
def verify_command(ctx, identity, genfun, basis, structure, shape, n, m, fmt):
    """Verify one identity or family of checks; exit 2 on a mismatch"""
    request = _command('verify', shape=list(shape.parts) if shape else None, format=fmt, m=m)
    chosen = sum(bool(x) for x in (identity, genfun, basis, structure))
    if chosen != 1:
        raise InvalidArgument('Give exactly one of --identity, --genfun, --basis, --structure')
    if basis is None and shape is None:
        raise InvalidArgument('--shape is required')

    if basis is not None:
        if n is None:
            raise InvalidArgument('--n is required with --basis')
        report = _run(qsym_service.basis_report, basis, n)
        ok = report.full_rank
    elif identity is not None:
        report = _run(qsym_service.identity_report, identity, shape, request.m)
        ok = report.holds
    elif genfun:
        report = _run(genfun_service.verify_genfun, shape, request.m)
        ok = report.ok
    else:
        ok = _run(_structure_checks, shape)
        report = None

    if request.format == OutputFormat.JSON and report is not None:
        click.echo(OutputTemplates.report(report, request.format))
    else:
        click.echo(OutputTemplates.verdict(ok))
    _finish(ctx, ok)


def _structure_checks(shape: Composition) -> bool:
    poset = poset_service.build_poset(shape)
    checks = {
        'descent relations': tableau_service.check_descent_relations(shape),
        'adjointness': hecke_service.check_adjointness(shape),
        'cover uniqueness': hecke_service.check_cover_uniqueness(shape),
        'poset duality': poset_service.check_duality(shape, poset),
        'closure': poset_service.check_closure(shape),
        'chain length': poset_service.chain_length(poset),
    }
    for variant in DescentVariant:
        checks[f"hecke relations ({variant.value})"] = hecke_service.verify_hecke_relations(variant, shape)
    poset_service.check_bounds(poset)
    for tableau in poset.vertices:
        for target in SpecialKind:
            if tableau_service.in_class(tableau, TARGET_CLASS[target]):
                word = hecke_service.straighten(tableau, target)
                checks[f"straighten {tableau} to {target.value}"] = hecke_service.replay(tableau, target, word)
    failed = [name for name, ok in checks.items() if not ok]
    for name in failed:
        logger.warning(f"Structure check failed for {shape}: {name}")
    return not failed


# ==========================================
# MODULES
# ==========================================

@cli.command('analyze')
@shape_option
@click.option('--family', type=click.Choice(sorted(FAMILIES)), default=None)
@click.option('--variant', type=LowerChoice(DescentVariant), default=None)
@click.option('--class', 'cls', type=LowerChoice(TableauClass), default=TableauClass.SIT.value)
@click.option('--quotient-by', type=LowerChoice(TableauClass), default=None)
@format_option
@click.pass_context
def analyze_command(ctx, shape, family, variant, cls, quotient_by, fmt):
    """Dimension, cyclic generators and indecomposability of a module; exit 2 on a mismatch"""
    request = _command('analyze', shape=list(shape.parts), variant=variant, tableau_class=cls, format=fmt)
    if family is not None:
        spec = module_service.family_spec(family, shape)
    elif variant is not None:
        spec = ModuleSpec(shape=shape, variant=request.variant, basis=request.tableau_class,
                          quotient_by=quotient_by)
    else:
        raise InvalidArgument('Give --family or --variant')

    report = _run(module_service.analyze, spec)
    ok = _run(module_service.verdict, spec, report)

    click.echo(OutputTemplates.report(report, request.format))
    _finish(ctx, ok)


def main(argv: Optional[List[str]] = None) -> int:
    """Run a command outside of `flask`; returns the exit status"""
    from app import create_app
    app = create_app()
    with app.app_context():
        try:
            result = cli.main(args=argv, prog_name='immaculate', standalone_mode=False)
        except click.UsageError as e:
            e.show()
            return EXIT_USAGE
        except click.ClickException as e:
            e.show()
            return e.exit_code
    return result if isinstance(result, int) else 0
