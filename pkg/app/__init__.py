"""
Immaculate Hecke Toolkit - Application Factory
"""
import os
import logging
from flask import Flask
from config.settings import config


def create_app(config_name=None):
    """Application factory"""

    if config_name is None:
        config_name = os.getenv('FLASK_ENV', 'development')

    app = Flask(__name__)

    # Load configuration
    app.config.from_object(config[config_name])
    app.json.sort_keys = app.config['JSON_SORT_KEYS']

    logging.basicConfig(
        level=app.config['LOG_LEVEL'],
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )

    # Initialize services
    from app.services import tableau_service, qsym_service
    tableau_service.init_app(app)
    qsym_service.init_app(app)

    # Register blueprints
    from app.routes import api
    app.register_blueprint(api)

    # Register CLI
    from app.cli import cli
    app.cli.add_command(cli)

    return app
