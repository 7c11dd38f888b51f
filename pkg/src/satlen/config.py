"""Runtime knobs shared across the engine."""

_degree_cap = 64
_saturation_cap = 64


def degree_cap() -> int:
    return _degree_cap


def set_degree_cap(cap: int) -> None:
    global _degree_cap
    if cap < 1:
        raise ValueError("degree cap must be positive")
    _degree_cap = cap


def saturation_cap() -> int:
    return _saturation_cap


def set_saturation_cap(cap: int) -> None:
    global _saturation_cap
    if cap < 1:
        raise ValueError("saturation cap must be positive")
    _saturation_cap = cap
