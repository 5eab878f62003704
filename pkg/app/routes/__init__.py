"""
Immaculate Hecke Toolkit - Routes
"""
from app.routes.api import api

__all__ = ['api']
