"""Exact Euler classes of surface-group representations and homology of cyclic branched covers."""

from importlib import resources

__version__ = "0.1.0"


def data_path(*parts: str):
    """Path of a bundled data file (``data_path("links.json")``)."""
    return resources.files("hakenlab").joinpath("data", *parts)
