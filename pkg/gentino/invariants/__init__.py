from .type import *
from .sextic import *
from .transvectant import *
from .igusa import *
