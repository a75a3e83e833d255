from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Iterator, Mapping, Optional, Tuple

from moncat.exceptions import SignatureException
from moncat.signatures.multigraph import Multigraph, Operation
from moncat.signatures.polygraph import Word

Permutation = Tuple[int, ...]

MATERIALIZE_LIMIT = 6


def identity_permutation(n: int) -> Permutation:
    return tuple(range(n))


def product(sigma: Permutation, tau: Permutation) -> Permutation:
    """ (σ·τ)(k) = σ(τ(k)). """
    if len(sigma) != len(tau):
        raise SignatureException('Permutations of different sizes cannot be multiplied')
    return tuple(sigma[t] for t in tau)


def inverse(sigma: Permutation) -> Permutation:
    result = [0] * len(sigma)
    for index, image in enumerate(sigma):
        result[image] = index
    return tuple(result)


def is_permutation(sigma: Permutation) -> bool:
    return sorted(sigma) == list(range(len(sigma)))


def all_permutations(n: int) -> Iterator[Permutation]:
    return _permutations(range(n))


def permute(items: Tuple, sigma: Permutation) -> Tuple:
    """ Position k of the result holds items[σ(k)]. """
    return tuple(items[s] for s in sigma)


@dataclass(frozen=True)
class OrbitElement:
    """ The element f_σ of the orbit of ``operation``. """

    operation: Operation
    permutation: Permutation

    @property
    def inputs(self) -> Word:
        return permute(self.operation.inputs, self.permutation)

    @property
    def output(self) -> str:
        return self.operation.output

    @property
    def name(self) -> str:
        if self.permutation == identity_permutation(len(self.permutation)):
            return self.operation.name
        return f"{self.operation.name}<{','.join(map(str, self.permutation))}>"


@dataclass(frozen=True)
class SymmetricMultigraph:
    """ A multigraph with a symmetric group action on every operation.

    Orbits are kept implicit: an element is a pair of a base operation
    and a permutation, and the action only rewrites the permutation.
    """

    base: Multigraph

    @property
    def name(self) -> str:
        return self.base.name

    def element(self, name: str, sigma: Optional[Permutation] = None) -> OrbitElement:
        op = self.base.operation(name)
        sigma = identity_permutation(op.arity) if sigma is None else tuple(sigma)
        if len(sigma) != op.arity or not is_permutation(sigma):
            raise SignatureException(f"Invalid permutation {sigma} for '{name}'")
        return OrbitElement(op, sigma)

    def act(self, sigma: Permutation, element: OrbitElement) -> OrbitElement:
        """ σ* with (σ·τ)* = σ* ⨾ τ*, so that σ*(f_τ) = f_{τ·σ}. """
        if len(sigma) != len(element.permutation) or not is_permutation(tuple(sigma)):
            raise SignatureException(f'Invalid permutation {sigma}')
        return OrbitElement(element.operation, product(element.permutation, tuple(sigma)))

    def orbit_size(self, name: str) -> int:
        size = 1
        for k in range(2, self.base.operation(name).arity + 1):
            size *= k
        return size

    def orbit(self, name: str) -> Iterator[OrbitElement]:
        op = self.base.operation(name)
        if op.arity > MATERIALIZE_LIMIT:
            raise SignatureException(
                f"Orbit of '{name}' has {op.arity} inputs, materialization is limited "
                f'to {MATERIALIZE_LIMIT}')
        for sigma in all_permutations(op.arity):
            yield OrbitElement(op, sigma)


def clique(m: Multigraph) -> SymmetricMultigraph:
    return SymmetricMultigraph(m)


def representative(
    s: SymmetricMultigraph,
    choice: Optional[Mapping[str, Permutation]] = None,
    name: Optional[str] = None,
) -> Multigraph:
    """ Pick one element per orbit, the declared order unless ``choice`` says otherwise. """
    choice = choice or {}
    operations = []
    for op in s.base.operations:
        element = s.element(op.name, choice.get(op.name))
        operations.append(Operation(op.name, element.inputs, op.output))
    return Multigraph(name or s.base.name, s.base.sorts, tuple(operations))
