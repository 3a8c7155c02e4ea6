"""Distance Laplacian spectra and extremal unicyclic graph verification."""

__version__ = "0.1.0"
