"""
Immaculate Hecke Toolkit - Services
"""
from app.services.composition_service import composition_service, CompositionService
from app.services.tableau_service import tableau_service, TableauService
from app.services.hecke_service import hecke_service, HeckeService
from app.services.poset_service import poset_service, PosetService, HassePoset
from app.services.qsym_service import qsym_service, QSymService
from app.services.genfun_service import genfun_service, GenfunService
from app.services.module_service import module_service, ModuleService, FAMILIES
from app.services.templates import OutputTemplates

__all__ = [
    'composition_service', 'CompositionService',
    'tableau_service', 'TableauService',
    'hecke_service', 'HeckeService',
    'poset_service', 'PosetService', 'HassePoset',
    'qsym_service', 'QSymService',
    'genfun_service', 'GenfunService',
    'module_service', 'ModuleService', 'FAMILIES',
    'OutputTemplates'
]
