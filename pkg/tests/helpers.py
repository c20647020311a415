from wheeler_ms import WheelerDFA


def permute(A, perm):
    """Renumber states: old state ``i`` becomes ``perm[i]``."""
    new_labels = [None] * A.n
    for i in range(1, A.n + 1):
        new_labels[perm.get(i, i) - 1] = A.label(i)
    edges = [(perm.get(u, u), perm.get(v, v)) for u, v in A.edges]
    finals = [perm.get(f, f) for f in A.finals]
    return WheelerDFA(new_labels, edges, finals, A.sigma)
