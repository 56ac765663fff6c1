"""Index sets I of {1..n} selecting which diagonal entries may vary."""

from dataclasses import dataclass


@dataclass(frozen=True)
class IndexSet:
    n: int
    members: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"matrix size must be >= 2, got {self.n}")
        bad = [i for i in self.members if not 1 <= i <= self.n]
        if bad:
            raise ValueError(f"indices {sorted(bad)} outside 1..{self.n}")

    @classmethod
    def of(cls, n: int, members=()) -> "IndexSet":
        return cls(n, frozenset(int(i) for i in members))

    @classmethod
    def full(cls, n: int) -> "IndexSet":
        return cls.of(n, range(1, n + 1))

    def __contains__(self, i: int) -> bool:
        return i in self.members

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1)) - self.members

    @property
    def label(self) -> str:
        return "{" + ",".join(str(i) for i in sorted(self.members)) + "}"


def ng_condition(ix: IndexSet) -> bool:
    """(NG): for every i in 1..n-1, i not in I implies i+1 in I."""
    return all(i in ix or i + 1 in ix for i in range(1, ix.n))
