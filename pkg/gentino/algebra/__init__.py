from .ring import *
from .poly import *
from .linalg import *
