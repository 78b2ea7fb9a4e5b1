from __future__ import annotations

import pytest

from ppcd import enumeration, pairings


@pytest.fixture(scope="session")
def corpus():
    """Every well-formed diagram for genus 2..6, keyed by genus."""
    return {g: list(enumeration.enumerate_wellformed(g)) for g in range(2, 7)}


@pytest.fixture(scope="session")
def connected_corpus(corpus):
    return {
        g: [d for d in diagrams if pairings.is_connected(d)]
        for g, diagrams in corpus.items()
    }
