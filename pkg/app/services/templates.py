"""
Immaculate Hecke Toolkit - Output Templates
Text, JSON and DOT renderings of tableaux, posets, characteristics and reports
"""
import json
from typing import Dict, Iterable, List

from pydantic import BaseModel

from app.models import (
    Tableau, TableauClassFlags, DescentSubset, HeckeWord, ActionResult,
    QSymElement, OutputFormat
)


class OutputTemplates:
    """Output formatting for the CLI and the API"""

    # ==========================================
    # TABLEAUX
    # ==========================================

    @staticmethod
    def tableaux(items: Iterable[Tableau], fmt: OutputFormat = OutputFormat.TEXT) -> str:
        items = list(items)
        if fmt == OutputFormat.JSON:
            return json.dumps([str(t) for t in items])
        return '\n'.join(str(t) for t in items)

    @staticmethod
    def tableau(tableau: Tableau, flags: TableauClassFlags = None,
                fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt == OutputFormat.JSON:
            payload = tableau.to_dict()
            if flags is not None:
                payload['classes'] = flags.to_dict()
            return json.dumps(payload)
        return str(tableau)

    @staticmethod
    def descents(sets: Dict[str, DescentSubset], fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt == OutputFormat.JSON:
            return json.dumps({name: list(subset.elements) for name, subset in sets.items()})
        return '\n'.join(f"{name}: {subset}" for name, subset in sets.items())

    # ==========================================
    # ACTIONS
    # ==========================================

    @staticmethod
    def action(result: ActionResult, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt == OutputFormat.JSON:
            return json.dumps(result.to_dict())
        return str(result)

    @staticmethod
    def word(word: HeckeWord, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt == OutputFormat.JSON:
            return json.dumps({'word': list(word.indices), 'length': len(word)})
        return str(word)

    # ==========================================
    # QUASISYMMETRIC FUNCTIONS
    # ==========================================

    @staticmethod
    def qsym(element: QSymElement, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt == OutputFormat.JSON:
            return json.dumps(element.to_dict())
        return str(element)

    # ==========================================
    # REPORTS
    # ==========================================

    @staticmethod
    def report(report: BaseModel, fmt: OutputFormat = OutputFormat.TEXT) -> str:
        if fmt == OutputFormat.JSON:
            return report.model_dump_json(by_alias=True)
        lines: List[str] = []
        for key, value in report.model_dump(mode='json', by_alias=True).items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"{key}:")
                lines.extend('  ' + ', '.join(f"{k}={v}" for k, v in item.items()) for item in value)
            elif isinstance(value, list):
                lines.append(f"{key}: {', '.join(map(str, value))}")
            else:
                lines.append(f"{key}: {value}")
        return '\n'.join(lines)

    @staticmethod
    def verdict(ok: bool) -> str:
        return 'OK' if ok else 'FAIL'
