from typing import Any, Dict, Type

__all__ = ("Event", "event_types",)

_event_types: Dict[str, Type["Event"]] = {}


def event_types() -> Dict[str, Type["Event"]]:
    """
    Every declared event class, keyed by class name.
    """
    return dict(_event_types)


class Event:
    """
    Base class for everything published through a `Dispatcher`.

    Handlers are routed by class name, so a second class with an existing name is rejected.
    Two events are equal when they share a class and their attributes compare equal.
    """

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        name = cls.__name__
        if name in _event_types:
            raise RuntimeError(f"Event {name!r} is already declared "
                               f"by {_event_types[name].__module__}")
        _event_types[name] = cls

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, self.__class__) and (vars(self) == vars(other))

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}>"
