"""Independent truth-table oracle, written without the library's evaluation code."""

from itertools import product


def value(terms, p):
    """f(p) from first principles: a monomial is 1 iff all its variables are 1 at p."""
    total = 0
    for m in terms:
        ok = 1
        i = 0
        while m >> i:
            if (m >> i) & 1 and not (p >> i) & 1:
                ok = 0
                break
            i += 1
        total += ok
    return total % 2


def zeros(terms, n):
    return {p for p in range(2 ** n) if value(terms, p) == 0}


def system_zeros(term_sets, n):
    return {p for p in range(2 ** n) if all(value(t, p) == 0 for t in term_sets)}


def bits(p, n):
    return tuple((p >> i) & 1 for i in range(n))


def from_bits(bs):
    return sum(b << i for i, b in enumerate(bs))


def cnf_models(n, clauses):
    out = set()
    for assign in product((0, 1), repeat=n):
        if all(any(assign[abs(l) - 1] == (l > 0) for l in c) for c in clauses):
            out.add(from_bits(assign))
    return out
