from .utils import check_version

__version__ = '0.1.0'
check_version(__version__)
