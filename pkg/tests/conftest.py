import random

import pytest

from xdoc import Corpus, SubstringRef


def rand_text(rng: random.Random, max_len: int = 12, alphabet: bytes = b"abc") -> bytes:
    return bytes(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))


def make_corpus(texts) -> Corpus:
    c = Corpus()
    for t in texts:
        c.add_document(t)
    return c


def rand_corpus(rng: random.Random, max_docs: int = 6, max_len: int = 12) -> Corpus:
    return make_corpus(rand_text(rng, max_len) for _ in range(rng.randint(1, max_docs)))


def iter_refs(corpus: Corpus):
    """Every valid SubstringRef of the corpus, in a fixed order."""
    for k in corpus.document_ids():
        L = corpus.length(k)
        for i in range(1, L + 1):
            for j in range(i, L + 1):
                yield SubstringRef(k, i, j)


@pytest.fixture
def golden() -> Corpus:
    return make_corpus([b"abab", b"ba", b"abc"])
