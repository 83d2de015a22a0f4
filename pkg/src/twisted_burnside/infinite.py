"""First-class infinity for Reidemeister numbers.

R(phi) = infinity is a legitimate outcome, not an error, so it gets a
dedicated singleton rather than an exception or float('inf').
"""


class InfiniteType:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infinite"

    def __reduce__(self):
        return (InfiniteType, ())


INFINITE = InfiniteType()


def is_infinite(value) -> bool:
    return isinstance(value, InfiniteType)
