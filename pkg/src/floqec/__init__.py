"""Surface codes on planar graphs with fermion-linear-optics simulation."""

__version__ = "0.1.0"
