import enum


class Deg3Case(enum.Enum):
    """
    Shape of the degree 3 map onto the second elliptic subcover, which depends on w = b^3 - 4ab + 9.
    """
    GENERAL = "general"
    B_ZERO = "b=0"
    W_ZERO = "w=0"


__all__ = ['Deg3Case']
