from .logger import Logger as Logger
from .record import BaseRecord as BaseRecord
from .runtime import RuntimeHelper as RuntimeHelper
