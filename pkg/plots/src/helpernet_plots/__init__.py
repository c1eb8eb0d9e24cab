"""Batch figure renderer for helpernet rate-region data files.

This package is a pure renderer: it parses the CSV/JSON files emitted by
the ``helpernet`` CLI and draws them. No rate is ever recomputed here; the
plotted coordinates are exactly the file values.
"""

from .datafile import DataFile, DataFileError, SegmentData, load_data_file
from .render import PlotSpec, RenderResult, render

__version__ = "0.1.0"

__all__ = ["DataFile", "DataFileError", "SegmentData", "load_data_file",
           "PlotSpec", "RenderResult", "render", "__version__"]
