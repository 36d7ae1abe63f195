import math


def mean(xs):
    """Arithmetic mean."""
    total = 0
    for x in xs:
        total += x
    return total / len(xs)


class Scaler:
    def __init__(self, factor: float = 2.0):
        self.factor = factor

    def apply(self, values: list) -> list:
        # multiply each element
        out = [v * self.factor for v in values if v is not None]
        return out


def clamp(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi and hi >= lo:
        return hi
    return x


def safe_log(x):
    try:
        from math import log
        return log(x)
    except ValueError:
        return None


def count_until(limit):
    n, steps = 0, 0
    while n < limit:
        n = n + 2
        steps += 1
    return
