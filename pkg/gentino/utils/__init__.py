from .io_utils import *
from .log_utils import *
from .string_utils import *
