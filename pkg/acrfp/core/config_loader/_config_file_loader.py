import json
import types
from pathlib import Path
from typing import Any, Dict, Optional

from niltype import Nil, Nilable

from .._errors import ConfigError
from ._config_tree import iter_options, iter_sections
from ._config_type import ConfigType

__all__ = ("ConfigFileLoader",)


class ConfigFileLoader:
    """
    Loads a JSON document of overrides on top of the default configuration.

    The document mirrors the config tree: top-level options plus one object per section,
    e.g. ``{"threads": 4, "Match": {"majority_fraction": 0.5}}``. Unknown sections or keys
    and values of the wrong type are rejected.
    """

    def __init__(self, default_config: ConfigType) -> None:
        self._default_config = default_config

    async def load(self, path: Optional[Path]) -> ConfigType:
        """
        Load the overrides stored at `path`.

        :param path: JSON file path, or None to return the defaults.
        :return: A config class derived from the defaults.
        :raises ConfigError: If the file is missing, is not valid JSON or fails validation.
        """
        if path is None:
            return self._default_config

        try:
            text = Path(path).read_text(encoding="utf-8")
        except FileNotFoundError:
            raise ConfigError(f"Config file '{path}' does not exist") from None
        except OSError as e:
            raise ConfigError(f"Failed to read config file '{path}': {e}") from None

        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError(f"Config file '{path}' is not valid JSON: {e}") from None

        if not isinstance(document, dict):
            raise ConfigError(f"Config file '{path}' must contain a JSON object")

        return self.apply(document, path=Path(path))

    def apply(self, overrides: Dict[str, Any], *, path: Nilable[Path] = Nil) -> ConfigType:
        """
        Derive a config class from the defaults and a dict of overrides.
        """
        namespace = self._derive_namespace(self._default_config, overrides, prefix="")
        if path is not Nil:
            namespace["path"] = path
        return _derive(self._default_config, namespace)

    def _derive_namespace(self, cls: type, overrides: Dict[str, Any], *,
                          prefix: str) -> Dict[str, Any]:
        options = dict(iter_options(cls))
        sections = dict(iter_sections(cls))
        namespace: Dict[str, Any] = {}

        for key, value in overrides.items():
            dotted = f"{prefix}{key}"
            if key in sections:
                if not isinstance(value, dict):
                    raise ConfigError(f"'{dotted}' must be an object of options")
                section = sections[key]
                section_ns = self._derive_namespace(section, value, prefix=f"{dotted}.")
                namespace[key] = _derive(section, section_ns)
            elif key in options and key != "path":
                namespace[key] = _coerce(dotted, options[key], value)
            else:
                raise ConfigError(f"Unknown config key '{dotted}'")

        return namespace


def _derive(base: type, namespace: Dict[str, Any]) -> Any:
    def exec_body(ns: Dict[str, Any]) -> None:
        ns["__module__"] = base.__module__
        ns["__qualname__"] = base.__qualname__
        ns.update(namespace)

    return types.new_class(base.__name__, (base,), exec_body=exec_body)


def _coerce(key: str, default: Any, value: Any) -> Any:
    if isinstance(default, bool):
        if isinstance(value, bool):
            return value
    elif isinstance(default, int):
        if isinstance(value, int) and not isinstance(value, bool):
            return value
    elif isinstance(default, float):
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
    elif isinstance(default, str):
        if isinstance(value, str):
            return value
    else:
        raise ConfigError(f"Config key '{key}' cannot be overridden from a file")

    raise ConfigError(
        f"Config key '{key}' expects {type(default).__name__}, got {type(value).__name__}"
    )
