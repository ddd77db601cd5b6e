from abc import ABC, abstractmethod
from asyncio import iscoroutinefunction
from heapq import heappush
from itertools import count
from typing import Any, Callable, Dict, List, Type

from ._event import Event

__all__ = ("Dispatcher", "Subscriber", "EventHandler",)

HandlerType = Callable[..., Any]

_registration_order = count()


class EventHandler:
    """
    A registered handler ordered by priority, then by registration order.

    Lower priority values run first. Sync and async callables are both accepted.
    """

    def __init__(self, priority: int, handler: HandlerType) -> None:
        self._priority = priority
        self._handler = handler
        self._order = next(_registration_order)

    async def __call__(self, event: Event) -> None:
        if iscoroutinefunction(self._handler):
            await self._handler(event)
        else:
            self._handler(event)

    def __lt__(self, other: "EventHandler") -> bool:
        if not isinstance(other, EventHandler):
            raise TypeError("Other must be an instance of EventHandler")
        return (self._priority, self._order) < (other._priority, other._order)


class Subscriber(ABC):
    @abstractmethod
    def subscribe(self, dispatcher: "Dispatcher") -> None:
        """
        Register this subscriber's handlers on `dispatcher`.
        """
        pass


class Dispatcher:
    """
    Routes events to handlers registered per event class.

    Used by the experiment runner to publish progress without knowing who renders it.
    """

    def __init__(self) -> None:
        self._events: Dict[str, List[EventHandler]] = {}

    def register(self, subscriber: Subscriber) -> None:
        subscriber.subscribe(self)

    def listen(self, event: Type[Event], handler: HandlerType, priority: int = 0) -> "Dispatcher":
        """
        Register `handler` for `event`.

        :param event: The event class to listen for.
        :param handler: Sync or async callable taking the event.
        :param priority: Handlers with lower values run first.
        :return: The dispatcher, so calls can be chained.
        :raises TypeError: If `event` is not an `Event` subclass.
        """
        if not (isinstance(event, type) and issubclass(event, Event)):
            raise TypeError("Event must be a subclass of 'acrfp.core.Event'")
        heappush(self._events.setdefault(event.__name__, []), EventHandler(priority, handler))
        return self

    async def fire(self, event: Event) -> None:
        """
        Invoke every handler registered for the event's class, in priority order.
        """
        handlers = self._events.get(event.__class__.__name__)
        if not handlers:
            return
        for handler in sorted(handlers):
            await handler(event)
