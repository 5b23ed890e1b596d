from .csv import *
