"""Character-count comparison between a group and the normalizer of a Sylow
p-subgroup: the number of irreducibles of degree prime to p should agree.

Every group in scope here is small and known territory, so a mismatch is
treated as a bug in the pipeline (Sylow construction, normalizer, character
tables), not as mathematical news.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable, character_table
from .groups import FiniteGroup, is_prime, normalizer, sylow


@dataclass(frozen=True)
class McKayReport:
    group_name: str
    prime: int
    group_size: int
    sylow_size: int
    normalizer_size: int
    count_group: int
    count_normalizer: int
    degrees_group: tuple[int, ...]
    degrees_normalizer: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.count_group == self.count_normalizer


def count_prime_to_p(table: CharacterTable, p: int) -> tuple[int, tuple[int, ...]]:
    """How many irreducible degrees are not divisible by p, and which."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    degrees = tuple(d for d in table.degrees if d % p != 0)
    return len(degrees), degrees


def mckay_check(group: FiniteGroup, p: int) -> McKayReport:
    """Run the whole pipeline for one group and one prime."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    sylow_subgroup = sylow(group, p)
    sylow_normalizer = normalizer(group, sylow_subgroup)
    table_group = character_table(group)
    table_normalizer = character_table(sylow_normalizer)
    count_g, degrees_g = count_prime_to_p(table_group, p)
    count_n, degrees_n = count_prime_to_p(table_normalizer, p)
    return McKayReport(
        group_name=group.name or "anonymous",
        prime=p,
        group_size=group.size,
        sylow_size=sylow_subgroup.size,
        normalizer_size=sylow_normalizer.size,
        count_group=count_g,
        count_normalizer=count_n,
        degrees_group=degrees_g,
        degrees_normalizer=degrees_n,
    )


def battery_groups() -> list[FiniteGroup]:
    """The builder sweep used by the self-check battery."""
    from . import groups as g

    out = [g.cyclic(n) for n in range(2, 13)]
    out += [g.binary_dihedral(n) for n in range(2, 7)]
    out += [g.binary_tetrahedral(), g.binary_octahedral(), g.binary_icosahedral()]
    out += [g.special_linear_2(p) for p in (2, 3, 5, 7)]
    return out


def primes_dividing(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
