from ._config_dumper import ConfigDumper, config_digest
from ._config_file_loader import ConfigFileLoader
from ._config_type import Config, ConfigType, Section

__all__ = ("Config", "Section", "ConfigType", "ConfigFileLoader",
           "ConfigDumper", "config_digest",)
