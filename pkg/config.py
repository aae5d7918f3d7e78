import os

BASE_DIR = os.path.abspath(os.path.dirname(__file__))


def _int_setting(name, value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be an integer, got '{value}'")


class Config:
    """Base configuration"""
    # Worker processes for unbudgeted searches; defaults to all cores
    THREADS = os.environ.get('BETW_THREADS') or os.cpu_count() or 1
    SEED = os.environ.get('BETW_SEED') or 0

    # Random tuples per complex-algebra condition on frames above four points
    SAMPLE_BUDGET = os.environ.get('BETW_SAMPLE_BUDGET') or 10000

    FIXTURES_PATH = os.environ.get('BETW_FIXTURES_PATH') or os.path.join(BASE_DIR, 'fixtures')
    LOG_LEVEL = os.environ.get('BETW_LOG_LEVEL') or 'WARNING'

    # Default bound for `betw embed`
    EMBED_MAX_POINTS = os.environ.get('BETW_EMBED_MAX_POINTS') or 5

    def __init__(self):
        """Convert and validate the numeric settings"""
        self.THREADS = _int_setting('BETW_THREADS', self.THREADS)
        if self.THREADS < 1:
            raise ValueError(f"BETW_THREADS must be at least 1, got {self.THREADS}")
        self.SEED = _int_setting('BETW_SEED', self.SEED)
        self.SAMPLE_BUDGET = _int_setting('BETW_SAMPLE_BUDGET', self.SAMPLE_BUDGET)
        if self.SAMPLE_BUDGET < 1:
            raise ValueError(f"BETW_SAMPLE_BUDGET must be positive, got {self.SAMPLE_BUDGET}")
        self.EMBED_MAX_POINTS = _int_setting('BETW_EMBED_MAX_POINTS', self.EMBED_MAX_POINTS)
        if not 1 <= self.EMBED_MAX_POINTS <= 6:
            raise ValueError(f"BETW_EMBED_MAX_POINTS must be between 1 and 6, got {self.EMBED_MAX_POINTS}")
        self.LOG_LEVEL = str(self.LOG_LEVEL).upper()
        if self.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ValueError(f"BETW_LOG_LEVEL is not a logging level: '{self.LOG_LEVEL}'")


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.environ.get('BETW_LOG_LEVEL') or 'INFO'


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    THREADS = 1
    SAMPLE_BUDGET = 200


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'default': Config
}
