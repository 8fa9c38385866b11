"""Face-ring toolkit: Möbius transforms, Hochster Betti numbers and moment-angle cohomology."""

__version__ = "0.1.0"
__author__ = "Face Ring Toolkit Developers"
