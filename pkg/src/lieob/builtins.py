"""Built-in example algebras and hand-verified automorphisms for each."""

from __future__ import annotations

import re
from dataclasses import dataclass
from random import Random
from typing import Callable

from .algebra import LieAlgebra, direct_sum, verify_jacobi
from .linalg import LinearMap
from .sampling import random_invertible, random_rational


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.from_brackets(n, {}, [f"c{k + 1}" for k in range(n)])


def heisenberg3() -> LieAlgebra:
    """[x, y] = z."""
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}}, ["x", "y", "z"])


def sl2() -> LieAlgebra:
    """[e, f] = h, [h, e] = 2e, [h, f] = -2f."""
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}}, ["e", "f", "h"])


def so3() -> LieAlgebra:
    """[e1, e2] = e3 and cyclic."""
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}}, ["e1", "e2", "e3"])


def aff1() -> LieAlgebra:
    """[a, b] = b."""
    return LieAlgebra.from_brackets(2, {(0, 1): {1: 1}}, ["a", "b"])


def sum_center_sl2() -> LieAlgebra:
    return direct_sum(abelian(1), sl2())


def sum_center2_aff1() -> LieAlgebra:
    return direct_sum(abelian(2), aff1())


# hand-verified automorphisms --------------------------------------------------

def _abelian_autos(n: int):
    return lambda rng: [random_invertible(rng, n) for _ in range(4)]


def _heisenberg_autos(rng: Random) -> list[LinearMap]:
    out = [LinearMap.diagonal([2, 1, 2])]
    for _ in range(3):
        a, b = random_invertible(rng, 2).entries
        det = a[0] * b[1] - a[1] * b[0]
        p, q = random_rational(rng), random_rational(rng)
        out.append(LinearMap.from_rows([[a[0], a[1], 0], [b[0], b[1], 0], [p, q, det]]))
    return out


def _sl2_autos(rng: Random) -> list[LinearMap]:
    lam = random_rational(rng, nonzero=True)
    torus = LinearMap.diagonal([lam, 1 / lam, 1])
    swap = LinearMap.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, -1]])
    return [torus, swap]


def cayley_rotation(a, b, c) -> LinearMap:
    """(I - K)^-1 (I + K) for the skew matrix K of (a, b, c); a rational rotation."""
    k = LinearMap.from_rows([[0, -c, b], [c, 0, -a], [-b, a, 0]])
    i = LinearMap.identity(3)
    return (i - k).inverse().compose(i + k)


def _so3_autos(rng: Random) -> list[LinearMap]:
    return [cayley_rotation(random_rational(rng), random_rational(rng), random_rational(rng)) for _ in range(4)]


def _aff1_autos(rng: Random) -> list[LinearMap]:
    out = []
    for _ in range(3):
        t, lam = random_rational(rng), random_rational(rng, nonzero=True)
        out.append(LinearMap.from_rows([[1, 0], [t, lam]]))
    return out


def _lift(center_dim: int, inner: Callable[[Random], list[LinearMap]]):
    def autos(rng: Random) -> list[LinearMap]:
        out = []
        for psi in inner(rng):
            a = random_invertible(rng, center_dim)
            out.append(LinearMap.block([[a, LinearMap.zero(center_dim, psi.cols)],
                                        [LinearMap.zero(psi.rows, center_dim), psi]]))
        return out
    return autos


@dataclass(frozen=True)
class Example:
    name: str
    description: str
    build: Callable[[], LieAlgebra]
    automorphisms: Callable[[Random], list[LinearMap]]


REGISTRY: dict[str, Example] = {
    ex.name: ex for ex in [
        Example("heisenberg3", "Heisenberg algebra, [x,y]=z", heisenberg3, _heisenberg_autos),
        Example("sl2", "sl(2), [e,f]=h, [h,e]=2e, [h,f]=-2f", sl2, _sl2_autos),
        Example("so3", "so(3), [e1,e2]=e3 cyclically", so3, _so3_autos),
        Example("aff1", "affine algebra of the line, [a,b]=b", aff1, _aff1_autos),
        Example("sum_center_sl2", "Q + sl(2)", sum_center_sl2, _lift(1, _sl2_autos)),
        Example("sum_center2_aff1", "Q^2 + aff(1)", sum_center2_aff1, _lift(2, _aff1_autos)),
    ]
}

_ABELIAN = re.compile(r"abelian_?(\d+)$")


def get_example(name: str) -> Example:
    """Look up a built-in; ``abelian_<n>`` is parameterized (1 <= n <= 32)."""
    m = _ABELIAN.match(name)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= 32:
            raise KeyError(f"abelian dimension {n} outside 1..32")
        return Example(f"abelian_{n}", f"abelian Q^{n}", lambda: abelian(n), _abelian_autos(n))
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: abelian_<n>, {', '.join(REGISTRY)}") from None


def example_names() -> list[str]:
    return ["abelian_<n>", *REGISTRY]


def check_registry() -> dict[str, bool]:
    out = {name: verify_jacobi(ex.build()).ok for name, ex in REGISTRY.items()}
    out["abelian_4"] = verify_jacobi(abelian(4)).ok
    return out

