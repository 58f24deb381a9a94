"""
Permutation representations for group specifications

Concrete families use their natural actions (cyclic, dihedral, symmetric,
alternating, elementary abelian). Quaternion groups and semidirect products
use regular representations; direct products act on the disjoint union of
the factors' points.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.exceptions import InvalidActionError
from ..perm.group import FiniteGroup, generate
from ..perm.permutation import Permutation, compose, from_cycles, identity
from .specs import Constructor, GroupSpec

logger = logging.getLogger(__name__)

QUATERNION_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

# unit * unit -> (sign, unit)
_UNIT_PRODUCTS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _split(label: str) -> Tuple[int, str]:
    return (-1, label[1:]) if label.startswith("-") else (1, label)


def _join(sign: int, unit: str) -> str:
    return unit if sign == 1 else f"-{unit}"


def quaternion_product(x: str, y: str) -> str:
    sx, ux = _split(x)
    sy, uy = _split(y)
    sign, unit = _UNIT_PRODUCTS[(ux, uy)]
    return _join(sx * sy * sign, unit)


def quaternion_right_multiplication(x: str) -> Permutation:
    """Point y goes to y*x on the labelled points of Q8"""
    return Permutation(tuple(
        QUATERNION_LABELS.index(quaternion_product(y, x)) for y in QUATERNION_LABELS
    ))


def quaternion_cycle_ijk() -> Permutation:
    """The automorphism i -> j -> k -> i as a permutation of the labelled points"""
    rename = {"1": "1", "i": "j", "j": "k", "k": "i"}
    images = []
    for label in QUATERNION_LABELS:
        sign, unit = _split(label)
        images.append(QUATERNION_LABELS.index(_join(sign, rename[unit])))
    return Permutation(tuple(images))


def _cyclic(n: int) -> Tuple[int, List[Permutation]]:
    if n == 1:
        return 1, [identity(1)]
    return n, [from_cycles(n, [list(range(n))])]


def _dihedral(n: int) -> Tuple[int, List[Permutation]]:
    if n == 1:
        return _cyclic(2)
    if n == 2:
        return _elementary_abelian(2, 2)
    rotation = from_cycles(n, [list(range(n))])
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    return n, [rotation, reflection]


def _symmetric(n: int) -> Tuple[int, List[Permutation]]:
    if n <= 1:
        return 1, [identity(1)]
    if n == 2:
        return 2, [from_cycles(2, [[0, 1]])]
    return n, [from_cycles(n, [[0, 1]]), from_cycles(n, [list(range(n))])]


def _alternating(n: int) -> Tuple[int, List[Permutation]]:
    if n <= 2:
        return 1, [identity(1)]
    return n, [from_cycles(n, [[0, 1, i]]) for i in range(2, n)]


def _elementary_abelian(p: int, k: int) -> Tuple[int, List[Permutation]]:
    if k == 0:
        return 1, [identity(1)]
    degree = p * k
    return degree, [from_cycles(degree, [list(range(i * p, (i + 1) * p))]) for i in range(k)]


def _shift(perm: Permutation, offset: int, degree: int) -> Permutation:
    images = list(range(degree))
    for point, image in enumerate(perm.images):
        images[point + offset] = image + offset
    return Permutation(tuple(images))


def _direct_product(left: FiniteGroup, right: FiniteGroup) -> Tuple[int, List[Permutation]]:
    degree = left.degree + right.degree
    gens = [_shift(g, 0, degree) for g in left.generators]
    gens += [_shift(g, left.degree, degree) for g in right.generators]
    return degree, gens


def automorphism_from_generator_images(N: FiniteGroup, images: Sequence[Permutation]) -> List[int]:
    """Extend generator images to an element-index map, checking it is an automorphism"""
    if len(images) != len(N.generators):
        raise InvalidActionError(
            f"{len(images)} generator images for {len(N.generators)} generators"
        )
    mapping: Dict[Permutation, Permutation] = {N.identity: N.identity}
    queue = deque([N.identity])
    while queue:
        x = queue.popleft()
        for gen, image in zip(N.generators, images):
            target = compose(x, gen)
            value = compose(mapping[x], image)
            if target not in mapping:
                mapping[target] = value
                queue.append(target)
            elif mapping[target] != value:
                raise InvalidActionError("generator images do not respect the relations of N")

    result = [N.index_of(mapping[x]) for x in N.elements]
    _require_automorphism(N, result)
    return result


def _require_automorphism(N: FiniteGroup, images: Sequence[int]):
    if sorted(images) != list(range(N.order)):
        raise InvalidActionError("action images are not a permutation of the normal factor")
    elements = N.elements
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            product = N.index_of(compose(x, y))
            if images[product] != N.index_of(compose(elements[images[i]], elements[images[j]])):
                raise InvalidActionError("action map is not multiplicative on the normal factor")


def _extend_action(N: FiniteGroup, H: FiniteGroup,
                   pairs: Sequence[Tuple[Permutation, Sequence[int]]]) -> Dict[Permutation, Tuple[int, ...]]:
    """Homomorphism H -> Aut(N) (right action) from its values on H's generators"""
    unit = tuple(range(N.order))
    on_generators: Dict[Permutation, Tuple[int, ...]] = {s: unit for s in H.generators}
    for gen, images in pairs:
        if gen not in on_generators:
            raise InvalidActionError(f"{gen!r} is not a generator of the acting group")
        images = tuple(images)
        _require_automorphism(N, images)
        on_generators[gen] = images

    phi: Dict[Permutation, Tuple[int, ...]] = {H.identity: unit}
    queue = deque([H.identity])
    while queue:
        h = queue.popleft()
        for s in H.generators:
            target = compose(h, s)
            # n^(hs) = (n^h)^s
            value = tuple(on_generators[s][i] for i in phi[h])
            if target not in phi:
                phi[target] = value
                queue.append(target)
            elif phi[target] != value:
                raise InvalidActionError("action map is not a homomorphism from the acting group")
    return phi


def _semidirect(N: FiniteGroup, H: FiniteGroup,
                pairs: Sequence[Tuple[Permutation, Sequence[int]]]) -> Tuple[int, List[Permutation]]:
    """Right regular representation of pairs (h, n) with (h1,n1)(h2,n2) = (h1 h2, n1^h2 n2)"""
    phi = _extend_action(N, H, pairs)
    size_n = N.order
    degree = size_n * H.order

    def point(h: Permutation, n_index: int) -> int:
        return H.index_of(h) * size_n + n_index

    gens = []
    for s in H.generators:
        images = [0] * degree
        for h in H.elements:
            hs = compose(h, s)
            for n_index in range(size_n):
                images[point(h, n_index)] = point(hs, phi[s][n_index])
        gens.append(Permutation(tuple(images)))
    for t in N.generators:
        images = [0] * degree
        for h in H.elements:
            for n_index, n in enumerate(N.elements):
                images[point(h, n_index)] = point(h, N.index_of(compose(n, t)))
        gens.append(Permutation(tuple(images)))
    return degree, gens


def _realize(spec: GroupSpec, cap: Optional[int]) -> Tuple[int, List[Permutation]]:
    kind = spec.constructor
    if kind is Constructor.CYCLIC:
        return _cyclic(spec.params[0])
    if kind is Constructor.DIHEDRAL:
        return _dihedral(spec.params[0])
    if kind is Constructor.SYMMETRIC:
        return _symmetric(spec.params[0])
    if kind is Constructor.ALTERNATING:
        return _alternating(spec.params[0])
    if kind is Constructor.ELEMENTARY_ABELIAN:
        return _elementary_abelian(*spec.params)
    if kind is Constructor.QUATERNION8:
        return 8, [quaternion_right_multiplication("i"), quaternion_right_multiplication("j")]
    if kind is Constructor.QUATERNION8_C3:
        return 8, [
            quaternion_right_multiplication("i"),
            quaternion_right_multiplication("j"),
            quaternion_cycle_ijk(),
        ]

    left, right = (build(factor, cap=cap) for factor in spec.factors)
    if kind is Constructor.DIRECT_PRODUCT:
        return _direct_product(left, right)
    if spec.action_map is None:
        raise InvalidActionError(f"semidirect spec {spec.name} has no action map")
    return _semidirect(left, right, spec.action_map(left, right))


def build(spec: GroupSpec, cap: Optional[int] = None) -> FiniteGroup:
    """Realize a spec as an enumerated permutation group"""
    degree, gens = _realize(spec, cap)
    group = generate(degree, gens, cap=cap, name=spec.name)
    logger.info(f"Built {spec.name}: order {group.order} on {degree} points")
    return group
