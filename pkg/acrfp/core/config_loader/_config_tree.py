from inspect import isclass
from typing import Any, Dict, Iterator, Tuple

import cabina

__all__ = ("iter_options", "iter_sections", "is_section",)


def is_section(value: Any) -> bool:
    return isclass(value) and issubclass(value, cabina.Section)


def _public_names(cls: type) -> Iterator[str]:
    seen: Dict[str, None] = {}
    for klass in reversed(cls.__mro__):
        for name in vars(klass):
            if not name.startswith("_"):
                seen.setdefault(name, None)
    return iter(seen)


def iter_sections(cls: type) -> Iterator[Tuple[str, type]]:
    """
    Yield `(name, section_class)` for every nested section in declaration order.
    """
    for name in _public_names(cls):
        value = getattr(cls, name)
        if is_section(value):
            yield name, value


def iter_options(cls: type) -> Iterator[Tuple[str, Any]]:
    """
    Yield `(name, value)` for every plain option (non-section, non-callable attribute).
    """
    for name in _public_names(cls):
        value = getattr(cls, name)
        if is_section(value) or callable(value) or isinstance(value, (classmethod,
                                                                      staticmethod)):
            continue
        yield name, value
