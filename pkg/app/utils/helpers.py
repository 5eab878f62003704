"""
Immaculate Hecke Toolkit - Combinatorial Helpers
"""
from math import factorial
from typing import List, Sequence, Tuple


def multinomial(total: int, parts: Sequence[int]) -> int:
    """total! / prod(part!) for parts summing to total"""
    if sum(parts) != total:
        raise ValueError(f"Parts {list(parts)} do not sum to {total}")
    result = factorial(total)
    for part in parts:
        result //= factorial(part)
    return result


def transpose(partition: Sequence[int]) -> Tuple[int, ...]:
    """Conjugate partition, computed column by column"""
    if not partition:
        return ()
    return tuple(sum(1 for part in partition if part >= col) for col in range(1, partition[0] + 1))


def hook_length_count(partition: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape partition"""
    conjugate = transpose(partition)
    hooks = 1
    for i, part in enumerate(partition):
        for j in range(part):
            arm = part - j - 1
            leg = conjugate[j] - i - 1
            hooks *= arm + leg + 1
    return factorial(sum(partition)) // hooks


def count_inversions(word: Sequence[int]) -> int:
    """Number of pairs p < q with word[p] > word[q]"""
    return sum(
        1
        for p in range(len(word))
        for q in range(p + 1, len(word))
        if word[p] > word[q]
    )


def subset_to_parts(elements: Sequence[int], n: int) -> List[int]:
    """(s_1, s_2 - s_1, ..., n - s_k) for a sorted subset of {1, ..., n-1}"""
    bounds = [0] + list(elements) + [n]
    return [b - a for a, b in zip(bounds, bounds[1:])]
