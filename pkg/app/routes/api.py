"""
Immaculate Hecke Toolkit - API Routes
"""
from flask import Blueprint, request, jsonify, current_app
from app.models import (
    Composition, Tableau, HeckeWord, ModuleSpec, ImmaculateError,
    DescentVariant, TableauClass, SpecialKind, BasisFamily
)
from app.services import (
    tableau_service, hecke_service, poset_service, qsym_service,
    genfun_service, module_service
)

api = Blueprint('api', __name__, url_prefix='/api')


@api.errorhandler(ImmaculateError)
def handle_domain_error(error):
    current_app.logger.error(f"Request failed: {error}")
    return jsonify({'error': str(error)}), 400


def _arg(name: str, required: bool = True, default=None):
    value = request.args.get(name, default)
    if required and value is None:
        raise ImmaculateError(f"Query parameter '{name}' is required")
    return value


def _enum(enum, value, name: str):
    try:
        return enum(value.lower() if enum is not BasisFamily else value)
    except ValueError:
        raise ImmaculateError(f"Unknown {name} '{value}'")


def _int(value, name: str):
    if value is None:
        return None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ImmaculateError(f"{name} '{value}' is not an integer")


# ==========================================
# HEALTH
# ==========================================

@api.route('/health', methods=['GET'])
def health():
    return jsonify({'status': 'ok', 'max_n': tableau_service.max_n})


# ==========================================
# TABLEAUX
# ==========================================

@api.route('/enumerate', methods=['GET'])
def enumerate_tableaux():
    """List standard immaculate tableaux of a class"""
    shape = Composition.parse(_arg('shape'))
    cls = _enum(TableauClass, _arg('class', default='sit'), 'class')
    tableaux = tableau_service.enumerate_standard(shape, cls)
    return jsonify({
        'shape': list(shape.parts),
        'class': cls.value,
        'count': len(tableaux),
        'tableaux': [str(t) for t in tableaux]
    })


@api.route('/special', methods=['GET'])
def special():
    shape = Composition.parse(_arg('shape'))
    kind = _enum(SpecialKind, _arg('kind'), 'kind')
    tableau = tableau_service.special(shape, kind)
    payload = tableau.to_dict()
    payload['classes'] = tableau_service.classify(tableau).to_dict()
    return jsonify(payload)


@api.route('/descents', methods=['GET'])
def descents():
    tableau = Tableau.parse(_arg('tableau'))
    flags = tableau_service.classify(tableau)
    return jsonify({
        'tableau': str(tableau),
        'classes': flags.to_dict(),
        'descents': {
            v.value: list(tableau_service.descent_set(tableau, v).elements)
            for v in DescentVariant
        }
    })


@api.route('/act', methods=['POST'])
def act():
    """Apply a generator or a word under one action variant"""
    data = request.get_json(silent=True) or {}
    if 'tableau' not in data or 'variant' not in data:
        return jsonify({'error': "Fields 'tableau' and 'variant' are required"}), 400

    tableau = Tableau.parse(str(data['tableau']))
    tableau_service.classify(tableau)
    variant = _enum(DescentVariant, str(data['variant']), 'variant')

    if 'gen' in data:
        result = hecke_service.apply_pi(variant, _int(data['gen'], 'gen'), tableau)
    elif 'word' in data:
        result = hecke_service.apply_word(variant, HeckeWord.parse(str(data['word'])), tableau)
    else:
        return jsonify({'error': "One of 'gen' or 'word' is required"}), 400

    return jsonify(result.to_dict())


@api.route('/straighten', methods=['POST'])
def straighten():
    data = request.get_json(silent=True) or {}
    if 'tableau' not in data or 'target' not in data:
        return jsonify({'error': "Fields 'tableau' and 'target' are required"}), 400

    tableau = Tableau.parse(str(data['tableau']))
    target = _enum(SpecialKind, str(data['target']), 'target')
    word = hecke_service.straighten(tableau, target)
    return jsonify({
        'tableau': str(tableau),
        'target': target.value,
        'word': list(word.indices),
        'replayed': hecke_service.replay(tableau, target, word)
    })


# ==========================================
# POSET AND CHARACTERISTICS
# ==========================================

@api.route('/poset', methods=['GET'])
def poset():
    shape = Composition.parse(_arg('shape'))
    built = poset_service.build_poset(shape)
    payload = poset_service.to_dict(built)
    payload['bounds'] = poset_service.check_bounds(built).model_dump()
    payload['rank_sizes'] = built.rank_sizes()
    return jsonify(payload)


@api.route('/expand', methods=['GET'])
def expand():
    shape = Composition.parse(_arg('shape'))
    variant = _enum(DescentVariant, _arg('variant'), 'variant')
    cls = _enum(TableauClass, _arg('class', default='sit'), 'class')
    return jsonify(qsym_service.characteristic(shape, variant, cls).to_dict())


@api.route('/verify', methods=['GET'])
def verify():
    """Identity, generating-function or basis check; failures still answer 200 with ok false"""
    m = _int(_arg('m', required=False), 'm')

    if _arg('basis', required=False):
        family = _enum(BasisFamily, _arg('basis'), 'basis family')
        report = qsym_service.basis_report(family, _int(_arg('n'), 'n'))
        return jsonify({'ok': report.full_rank, 'report': report.model_dump(mode='json')})

    shape = Composition.parse(_arg('shape'))
    if _arg('identity', required=False):
        report = qsym_service.identity_report(_arg('identity'), shape, m)
        ok = report.holds
    elif _arg('genfun', required=False):
        report = genfun_service.verify_genfun(shape, m)
        ok = report.ok
    else:
        return jsonify({'error': "One of 'identity', 'genfun' or 'basis' is required"}), 400

    return jsonify({'ok': ok, 'report': report.model_dump(mode='json')})


# ==========================================
# MODULES
# ==========================================

@api.route('/analyze', methods=['GET'])
def analyze():
    shape = Composition.parse(_arg('shape'))
    family = _arg('family', required=False)
    if family is not None:
        spec = module_service.family_spec(family, shape)
    else:
        quotient = _arg('quotient_by', required=False)
        spec = ModuleSpec(
            shape=shape,
            variant=_enum(DescentVariant, _arg('variant'), 'variant'),
            basis=_enum(TableauClass, _arg('class', default='sit'), 'class'),
            quotient_by=_enum(TableauClass, quotient, 'class') if quotient else None,
        )
    report = module_service.analyze(spec)
    return jsonify({
        'ok': module_service.verdict(spec, report),
        'report': report.model_dump(mode='json', by_alias=True)
    })
