from rings.models import RingSpec, RingValue


def ring_add(a: RingValue, b: RingValue) -> RingValue:
    return a + b


def ring_sub(a: RingValue, b: RingValue) -> RingValue:
    return a - b


def ring_mul(a: RingValue, b: RingValue) -> RingValue:
    return a * b


def ring_neg(a: RingValue) -> RingValue:
    return -a


def ring_pow(a: RingValue, exponent: int) -> RingValue:
    return a**exponent


def is_unit(a: RingValue) -> bool:
    return a.is_unit


def invert(a: RingValue) -> RingValue:
    return a.inverse()


def from_integer(n: int, ring: RingSpec) -> RingValue:
    return ring.from_integer(n)
