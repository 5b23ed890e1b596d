from .type import *
from .elliptic import *
from .modular import *
from .degree2 import *
from .degree3 import *
