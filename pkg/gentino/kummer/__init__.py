from .theta import *
from .surface import *
from .maps import *
from .ladder import *
