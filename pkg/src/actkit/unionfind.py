class UnionFind:
    """Disjoint sets over ``range(n)``; the root of a set is its least member."""

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        """Merge the sets of x and y; return True if they were distinct."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def class_map(self):
        """Canonical class map: classes numbered in order of least member."""
        labels = {}
        out = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in labels:
                labels[r] = len(labels)
            out.append(labels[r])
        return tuple(out)
