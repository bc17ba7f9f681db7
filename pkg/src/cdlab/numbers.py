"""Integer helpers for group orders (always small)."""


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == {n: 1}


def prime_of_power(n: int) -> int | None:
    """``p`` if ``n`` is a positive power of the prime ``p``, else None."""
    f = prime_factors(n)
    return next(iter(f)) if len(f) == 1 else None


def smallest_prime(n: int) -> int | None:
    f = prime_factors(n)
    return min(f) if f else None
