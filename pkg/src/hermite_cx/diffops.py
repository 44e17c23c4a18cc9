"""Raising operators and Gaussian-weighted derivatives, all inside the
polynomial ring.

The weight ``exp(-z*zbar)`` never appears explicitly: conjugating a derivative
by it gives the twisted derivation ``g -> d/dz g - zbar*g``, which is what the
weighted routines iterate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import FieldElem
from .multipoly import PARTNER, Poly, VariableError, partial, substitute, var


@dataclass(frozen=True)
class WeightTag:
    """Attaches the weight ``exp(-s*sbar)`` to the pair ``(s, sbar)``."""

    holo: str = "z"

    @property
    def anti(self) -> str:
        return PARTNER[self.holo]

    def __post_init__(self):
        if self.holo not in ("z", "w", "u", "v"):
            raise VariableError(f"no conjugate pair rooted at {self.holo!r}")


Z_WEIGHT = WeightTag("z")
W_WEIGHT = WeightTag("w")


def raise_z(f: Poly, tag: WeightTag = Z_WEIGHT) -> Poly:
    """``(-d/dzbar + z) f``; raises the first Hermite index."""
    return var(tag.holo) * f - partial(tag.anti, f)


def raise_zbar(f: Poly, tag: WeightTag = Z_WEIGHT) -> Poly:
    """``(-d/dz + zbar) f``; raises the second Hermite index."""
    return var(tag.anti) * f - partial(tag.holo, f)


def raise_pow(which: str, n: int, f: Poly, tag: WeightTag = Z_WEIGHT) -> Poly:
    if n < 0:
        raise ValueError("operator power must be nonnegative")
    if which == "z":
        step = raise_z
    elif which == "zbar":
        step = raise_zbar
    else:
        raise ValueError(f"which must be 'z' or 'zbar', got {which!r}")
    for _ in range(n):
        f = step(f, tag)
    return f


def twisted_partial(name: str, f: Poly, tag: WeightTag = Z_WEIGHT) -> Poly:
    """``exp(s sbar) d/dname (exp(-s sbar) f)`` for name in the tagged pair."""
    if name == tag.holo:
        return partial(name, f) - var(tag.anti) * f
    if name == tag.anti:
        return partial(name, f) - var(tag.holo) * f
    raise VariableError(f"{name!r} is not part of the weighted pair {tag}")


def weighted_partial(p: int, q: int, f: Poly, tag: WeightTag = Z_WEIGHT) -> Poly:
    """``exp(z zbar) d^p/dzbar^p d^q/dz^q (exp(-z zbar) f)`` exactly."""
    if p < 0 or q < 0:
        raise ValueError("derivative orders must be nonnegative")
    for _ in range(q):
        f = twisted_partial(tag.holo, f, tag)
    for _ in range(p):
        f = twisted_partial(tag.anti, f, tag)
    return f


def iterated_partial(f: Poly, **orders: int) -> Poly:
    """Plain repeated derivative, e.g. ``iterated_partial(f, zbar=2, z=1)``."""
    for name, k in orders.items():
        for _ in range(k):
            f = partial(name, f)
    return f


def real_raise(f: Poly) -> Poly:
    """``(-D + 2x) f`` for a polynomial in x alone."""
    extra = f.variables() - {"x"}
    if extra:
        raise VariableError(f"real_raise expects a polynomial in x only, got {sorted(extra)}")
    return 2 * var("x") * f - partial("x", f)


def scaled_raise_pow(which: str, n: int, f: Poly, s) -> Poly:
    """Raising operator written in the rescaled variable ``s*z`` (s real):
    ``(-d/d(s zbar) + s z)^n`` for which="z", and the partner for "zbar"."""
    s = FieldElem.coerce(s)
    inv = s.inverse()
    g = substitute(f, {"z": inv * var("z"), "zbar": inv * var("zbar")})
    h = raise_pow(which, n, g)
    return substitute(h, {"z": s * var("z"), "zbar": s * var("zbar")})
