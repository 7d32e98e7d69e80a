from .main import CONF
