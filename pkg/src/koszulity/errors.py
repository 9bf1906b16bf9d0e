"""Shared exception types.

InputError marks malformed or out-of-contract input (bad primes, loops in
edge lists, dimension mismatches).  ResourceLimitError marks a refusal to
start a computation whose enumeration guard is exceeded; it always names
the bound that was hit.
"""


class InputError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    pass
