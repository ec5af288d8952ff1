"""4-panel accuracy figures for the GSVD formulation-comparison runs."""

from .render import FigureSpec, SchemaError, load_accuracy_csv, render

__version__ = "1.0.0"

__all__ = ["FigureSpec", "SchemaError", "load_accuracy_csv", "render"]
