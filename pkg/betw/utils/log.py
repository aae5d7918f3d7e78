import logging
from flask import current_app


def get_logger():
    """App logger inside an application context, the 'betw' logger elsewhere (workers, library use)"""
    try:
        return current_app.logger
    except RuntimeError:
        return logging.getLogger('betw')
