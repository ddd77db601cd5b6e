from ..core import Dispatcher, Subscriber

__all__ = ("SilentReporter",)


class SilentReporter(Subscriber):
    """
    Prints nothing; results are only written to the output directory.
    """

    def subscribe(self, dispatcher: Dispatcher) -> None:
        pass
