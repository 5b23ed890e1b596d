from .type import *
from .params import *
from .curve import *
from .stages import *
from .factorizer import *
