from .type import *
from .locus import *
from .dihedral import *
from .classify import *
from .sampling import *
