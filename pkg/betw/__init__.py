from flask import Flask
from config import config


def create_app(config_name='default'):
    """Application factory"""
    if config_name not in config:
        raise ValueError(f"Unknown configuration '{config_name}' (expected one of: {', '.join(config)})")
    app = Flask(__name__)
    # instantiate so the settings are converted and validated
    app.config.from_object(config[config_name]())
    app.logger.setLevel(app.config['LOG_LEVEL'])

    # Register command blueprints
    from betw.commands.frames import frames_bp
    from betw.commands.algebras import algebras_bp
    from betw.commands.complex import complex_bp
    from betw.commands.canonical import canonical_bp
    from betw.commands.morphisms import morphisms_bp
    from betw.commands.search import search_bp
    from betw.commands.golden import golden_bp

    app.register_blueprint(frames_bp)
    app.register_blueprint(algebras_bp)
    app.register_blueprint(complex_bp)
    app.register_blueprint(canonical_bp)
    app.register_blueprint(morphisms_bp)
    app.register_blueprint(search_bp)
    app.register_blueprint(golden_bp)

    return app
