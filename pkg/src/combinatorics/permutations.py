"""
Brute-force ground truth for Hurwitz numbers.

Counts tuples (X_1, ..., X_m) in S_d with prescribed cycle types and
X_1 ... X_m = id by enumerating the conjugacy classes directly: the two halves
of the product are multiplied out separately and matched. Characters play no
part here, so the Frobenius formula is checked against these counts.

Permutations are image tuples on {0, ..., d-1}. Composition is left to right:
compose(s, t)[x] = t[s[x]].
"""
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, List, Optional, Sequence, Tuple

from src.combinatorics.partitions import Partition
from src.config import DEFAULT_ENUMERATION_CAP, HARD_ENUMERATION_LIMIT, get_settings
from src.exceptions import EnumerationCapError, IncompatibleWeightsError, InvalidInputError

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def resolve_cap(cap: Optional[int] = None) -> int:
    cap = cap if cap is not None else get_settings().enumeration_cap
    if cap > HARD_ENUMERATION_LIMIT:
        raise EnumerationCapError(cap, HARD_ENUMERATION_LIMIT)
    if cap > DEFAULT_ENUMERATION_CAP:
        logger.warning("Enumeration cap raised to %d; brute force over S_%d can take a long time", cap, cap)
    return cap


def _check_degree(d: int, cap: Optional[int]) -> None:
    limit = resolve_cap(cap)
    if d > limit:
        raise EnumerationCapError(d, limit)


def identity(d: int) -> Perm:
    return tuple(range(d))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(t[x] for x in s)


def inverse(s: Perm) -> Perm:
    out = [0] * len(s)
    for x, y in enumerate(s):
        out[y] = x
    return tuple(out)


def cycle_type(s: Sequence[int]) -> Partition:
    seen = [False] * len(s)
    lengths = []
    for start in range(len(s)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = s[x]
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


def _cycles_to_perm(cycles: List[List[int]], d: int) -> Perm:
    image = list(range(d))
    for cycle in cycles:
        for i, x in enumerate(cycle):
            image[x] = cycle[(i + 1) % len(cycle)]
    return tuple(image)


def _build_cycles(remaining: List[int], lengths: List[int]) -> Iterator[List[List[int]]]:
    # The smallest unused point always opens the next cycle, so every cycle
    # decomposition is produced exactly once.
    if not remaining:
        yield []
        return
    first, rest = remaining[0], remaining[1:]
    for length in sorted(set(lengths), reverse=True):
        others = list(lengths)
        others.remove(length)
        for tail in _arrangements(rest, length - 1):
            cycle = [first] + tail
            left = [x for x in rest if x not in tail]
            for more in _build_cycles(left, others):
                yield [cycle] + more


def _arrangements(items: List[int], r: int) -> Iterator[List[int]]:
    if r == 0:
        yield []
        return
    for i, x in enumerate(items):
        for tail in _arrangements(items[:i] + items[i + 1:], r - 1):
            yield [x] + tail


def class_elements(mu: Partition, cap: Optional[int] = None) -> Iterator[Perm]:
    """Every permutation of cycle type mu, each exactly once."""
    _check_degree(mu.weight, cap)
    yield from _class_tuple(mu)


@lru_cache(maxsize=None)
def _class_tuple(mu: Partition) -> Tuple[Perm, ...]:
    d = mu.weight
    return tuple(_cycles_to_perm(cycles, d) for cycles in _build_cycles(list(range(d)), list(mu)))


def _matchings(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not points:
        yield []
        return
    a, rest = points[0], points[1:]
    for i, b in enumerate(rest):
        for more in _matchings(rest[:i] + rest[i + 1:]):
            yield [(a, b)] + more


def fixed_point_free_involutions(k: int, cap: Optional[int] = None) -> Iterator[Perm]:
    """All perfect matchings of {0, ..., 2k-1} as permutations; (2k-1)!! of them."""
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    d = 2 * k
    _check_degree(d, cap)
    for matching in _matchings(list(range(d))):
        yield _cycles_to_perm([list(pair) for pair in matching], d)


def _multiply_into(products: Counter, elements: Sequence[Perm]) -> Counter:
    out: Counter = Counter()
    for p, mult in products.items():
        for x in elements:
            out[compose(p, x)] += mult
    return out


def _products_chunk(args) -> Counter:
    head, rest = args
    products = Counter(head)
    for elements in rest:
        products = _multiply_into(products, elements)
    return products


def _products(element_lists: Sequence[Sequence[Perm]], d: int, workers: int = 1) -> Counter:
    """Multiplicity of every product X_1 X_2 ... X_j with X_i drawn from element_lists[i]."""
    if not element_lists:
        return Counter({identity(d): 1})
    head, rest = element_lists[0], list(element_lists[1:])
    if workers <= 1 or len(head) < 2 * workers:
        return _products_chunk((head, rest))
    size = -(-len(head) // workers)
    chunks = [(head[i:i + size], rest) for i in range(0, len(head), size)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_products_chunk, chunks):
            total.update(part)
    return total


def _split_point(sizes: Sequence[int]) -> int:
    """Prefix length that best balances the two halves' enumeration work."""
    best, best_cost = 0, None
    for j in range(len(sizes) + 1):
        cost = max(prod(sizes[:j]), prod(sizes[j:]))
        if best_cost is None or cost < best_cost:
            best, best_cost = j, cost
    return best


def _count_identity_products(element_lists: List[Sequence[Perm]], d: int, workers: int = 1) -> int:
    """
    Number of (X_1, ..., X_m) with X_i drawn from element_lists[i] and
    X_1 X_2 ... X_m = id. The left and right halves are multiplied out into
    Counters separately and matched through L R = id, i.e. R = L^{-1}.
    """
    j = _split_point([len(xs) for xs in element_lists])
    left = _products(element_lists[:j], d, workers)
    right = _products(element_lists[j:], d, workers)
    if len(left) > len(right):
        left, right = right, left
    return sum(mult * right.get(inverse(p), 0) for p, mult in left.items())


def _check_profiles(profiles: Sequence[Partition], d: int) -> None:
    if not profiles:
        raise InvalidInputError("at least one profile is required")
    weights = {p.weight for p in profiles}
    if weights != {d}:
        raise IncompatibleWeightsError(f"profile weights {sorted(weights)} vs degree {d}")


def count_solutions(profiles: Sequence[Partition], d: int, cap: Optional[int] = None, workers: int = 1) -> int:
    """Raw number of ordered factorizations of the identity with the given cycle types."""
    _check_profiles(profiles, d)
    _check_degree(d, cap)
    lists = [_class_tuple(mu) for mu in profiles]
    return _count_identity_products(lists, d, workers)


def count_factorizations(profiles: Sequence[Partition], d: int, cap: Optional[int] = None, workers: int = 1) -> Fraction:
    return Fraction(count_solutions(profiles, d, cap, workers), factorial(d))


def count_brickwork_solutions(kappa: Partition, mu: Partition, n: int, cap: Optional[int] = None, workers: int = 1) -> int:
    if kappa.weight != mu.weight:
        raise IncompatibleWeightsError(f"|kappa|={kappa.weight}, |mu|={mu.weight}")
    if kappa.weight % 2:
        raise InvalidInputError("brickwork requires even degree")
    if n < 1:
        raise InvalidInputError(f"number of bricks must be positive, got {n}")
    k = kappa.weight // 2
    _check_degree(2 * k, cap)
    if k == 0:
        return 1
    bricks = tuple(fixed_point_free_involutions(k, cap))
    lists = [_class_tuple(kappa)] + [bricks] * n + [_class_tuple(mu)]
    return _count_identity_products(lists, 2 * k, workers)


def count_brickwork(kappa: Partition, mu: Partition, n: int, cap: Optional[int] = None, workers: int = 1) -> Fraction:
    """Brute-force H_{S^2}(kappa, mu, (2^k) x n)."""
    raw = count_brickwork_solutions(kappa, mu, n, cap, workers)
    return Fraction(raw, factorial(kappa.weight))
