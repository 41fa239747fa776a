"""Grammar-driven toolkit for COGS-style structural generalization benchmarks."""

__version__ = "0.1.0"
