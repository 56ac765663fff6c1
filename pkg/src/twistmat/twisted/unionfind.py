"""Disjoint sets over 0..n-1 whose representative is always the least member."""


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if y < x:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]

    def reps(self) -> list[int]:
        return [x for x in range(len(self.parent)) if self.parent[x] == x]

    def __len__(self) -> int:
        return len(self.reps())
