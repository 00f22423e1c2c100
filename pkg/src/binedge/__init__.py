"""Cohen-Macaulay binomial edge ideals: combinatorial classifiers and an exact verification engine."""

__version__ = "0.1.0"
