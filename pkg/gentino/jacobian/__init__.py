from .curve import *
from .mumford import *
