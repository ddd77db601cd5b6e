from pathlib import Path
from typing import Type

import cabina

__all__ = ("Config", "Section", "ConfigType",)


class Section(cabina.Section):
    """
    A group of related settings, e.g. ``Config.Spectral``.
    """
    pass


class Config(cabina.Config, Section):
    """
    Root of the acrfp configuration tree.

    Defaults live as class attributes; a user file only carries overrides, which the
    loader applies by deriving a new class so the defaults themselves never change.
    """

    path: Path = Path("acrfp.json")
    """
    Path of the configuration file the tree was loaded from.
    """


ConfigType = Type[Config]
