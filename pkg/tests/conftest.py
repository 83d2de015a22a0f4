import pytest

from twisted_burnside import corpus as corpus_mod
from twisted_burnside.groups import enumerate_endomorphisms


@pytest.fixture(scope="session")
def corpus_pairs():
    """Every corpus group with all of its endomorphisms, built once."""
    out = []
    for name in corpus_mod.corpus_names(24):
        G = corpus_mod.corpus_group(name)
        out.append((G, enumerate_endomorphisms(G)))
    return out
