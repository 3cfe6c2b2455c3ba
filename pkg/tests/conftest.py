import pytest

from fusionsys import FusionContext, load_corpus


@pytest.fixture(scope="session")
def corpus():
    """(name, Group) pairs for the whole builtin corpus."""
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_contexts(corpus):
    """FusionContext for every corpus entry at every prime dividing |G|."""
    out = []
    for name, G in corpus:
        n = G.order
        p = 2
        primes = []
        while p * p <= n:
            if n % p == 0:
                primes.append(p)
                while n % p == 0:
                    n //= p
            p += 1
        if n > 1:
            primes.append(n)
        for p in primes:
            out.append((name, p, FusionContext.build(G, p)))
    return out
