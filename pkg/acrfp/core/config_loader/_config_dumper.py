import hashlib
import json
from typing import Any, Dict

from ._config_tree import iter_options, iter_sections
from ._config_type import ConfigType

__all__ = ("ConfigDumper", "config_digest",)

_JSON_SCALARS = (bool, int, float, str)


class ConfigDumper:
    """
    Serializes a config class (defaults plus overrides) back to the JSON override format.

    Dumping the defaults gives the full template written by ``acrfp config init``; loading
    that file again yields an equivalent configuration.
    """

    def to_dict(self, config: type) -> Dict[str, Any]:
        document: Dict[str, Any] = {}
        for name, value in iter_options(config):
            if name != "path" and isinstance(value, _JSON_SCALARS):
                document[name] = value
        for name, section in iter_sections(config):
            document[name] = self.to_dict(section)
        return document

    def dumps(self, config: ConfigType) -> str:
        return json.dumps(self.to_dict(config), indent=2) + "\n"


def config_digest(config: ConfigType) -> str:
    """
    Return the first 12 hex digits of the SHA-256 of the canonical JSON dump.
    """
    canonical = json.dumps(ConfigDumper().to_dict(config), sort_keys=True,
                           separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:12]
