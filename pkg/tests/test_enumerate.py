from rck.canonical import canonical_form
from rck.enumerate_graphs import KNOWN_COUNTS, all_graphs, graphs_up_to


def test_counts_match_published_values_small():
    levels = graphs_up_to(6)
    for n in range(1, 7):
        assert len(levels[n]) == KNOWN_COUNTS[n]


def test_level_lists_are_canonical_and_sorted():
    graphs = all_graphs(5)
    forms = [canonical_form(g) for g in graphs]
    assert forms == sorted(forms)
    assert len(set(forms)) == len(forms)


def test_corpus_counts_up_to_eight(corpus):
    for n in range(1, 9):
        assert len(corpus[n]) == KNOWN_COUNTS[n]
