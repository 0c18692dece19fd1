__author__ = "Adam Tyson"
__version__ = "0.1.0"
