"""Independence dimension of a set of family member vectors.

A coordinate set S is independent when every j in S can be varied by some
pair of vectors that agree on the rest of S. The property is inherited by
subsets, so the search grows sets level by level and only extends sets whose
every face already passed.
"""
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

Vector = Tuple[int, ...]


def varies_alone(vectors: Iterable[Vector], subset: Sequence[int], j: int) -> bool:
    """Some pair agrees on subset minus j and differs at j."""
    rest = [i for i in subset if i != j]
    seen = {}
    for v in vectors:
        key = tuple(v[i] for i in rest)
        first = seen.setdefault(key, v[j])
        if first != v[j]:
            return True
    return False


def is_independent(vectors: Sequence[Vector], subset: Sequence[int]) -> bool:
    return all(varies_alone(vectors, subset, j) for j in subset)


def independence_dimension(base_vector: Sequence[int], members: Iterable[Sequence[int]]) -> int:
    """Largest independent coordinate set over members and the base."""
    vectors: List[Vector] = sorted({tuple(base_vector)} | {tuple(v) for v in members})
    width = len(base_vector)
    level: Set[FrozenSet[int]] = {
        frozenset([j]) for j in range(width) if len({v[j] for v in vectors}) > 1
    }
    coords = sorted(j for s in level for j in s)
    best = 1 if level else 0
    while level:
        grown: Set[FrozenSet[int]] = set()
        for subset in level:
            for j in coords:
                if j <= max(subset):
                    continue
                candidate = subset | {j}
                if all(candidate - {i} in level for i in candidate) and is_independent(vectors, sorted(candidate)):
                    grown.add(candidate)
        if grown:
            best += 1
        level = grown
    return best


def project(vectors: Iterable[Sequence[int]], drop: Iterable[int]) -> List[Vector]:
    dropped = set(drop)
    return [tuple(x for i, x in enumerate(v) if i not in dropped) for v in vectors]


def fiber_dimension(base_vector: Sequence[int], members: Iterable[Sequence[int]], period_end: int) -> int:
    """Independence dimension after dropping x and the final period entry.

    period_end is the index of the final period entry; x is the last coordinate.
    """
    drop = (period_end, len(base_vector) - 1)
    return independence_dimension(project([base_vector], drop)[0], project(members, drop))

