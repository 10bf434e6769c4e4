import itertools
import time

import pytest

from subcount.verifier import build_corpus, compute_entries, default_corpus_config, CorpusConfig


@pytest.fixture(scope="session")
def default_run():
    """(config, corpus, entries, seconds spent building them) for the default corpus."""
    start = time.perf_counter()
    cfg = default_corpus_config()
    corpus = build_corpus(cfg)
    entries = compute_entries(corpus, cfg)
    return cfg, corpus, entries, time.perf_counter() - start


@pytest.fixture(scope="session")
def default_entries(default_run):
    return default_run[2]


@pytest.fixture(scope="session")
def small_entries():
    cfg = CorpusConfig(max_order=60)
    return compute_entries(build_corpus(cfg), cfg)


# Brute-force oracles, written against plain Python lists so they share no
# code with the package.

def naive_closure(table, seeds):
    elems = {0} | set(seeds)
    changed = True
    while changed:
        changed = False
        for a, b in itertools.product(list(elems), repeat=2):
            c = table[a][b]
            if c not in elems:
                elems.add(c)
                changed = True
    return frozenset(elems)


def naive_cyclic_subgroups(table):
    return {naive_closure(table, [g]) for g in range(len(table))}


def naive_all_subgroups(table):
    """Every subset containing 0 and closed under multiplication (small groups only)."""
    n = len(table)
    found = set()
    others = list(range(1, n))
    for r in range(n):
        for combo in itertools.combinations(others, r):
            s = (0,) + combo
            ss = set(s)
            if all(table[a][b] in ss for a in s for b in s):
                found.add(frozenset(s))
    return found


def naive_order(table, g):
    k, x = 1, g
    while x != 0:
        x = table[x][g]
        k += 1
    return k


ACCEPTANCE_RESULTS = {}


@pytest.fixture
def acceptance_log():
    """Dict the acceptance tests fill with one pass/fail line per criterion."""
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_RESULTS):
            terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
