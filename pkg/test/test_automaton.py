from random import Random

import pytest

from moncat.diagrams import Diagram, parse_diagram
from moncat.exceptions import AutomatonException, PolygraphMismatchException
from moncat.regular import MonoidalAutomaton, accepts, delta_hat, run
from moncat.regular.automaton import tensor_split
from test.mocks.corpus import braids, corpus, parens, shapes
from test.mocks.random_diagrams import random_diagram, shuffle_interchanges


def parens_automaton():
    return corpus('parens').automaton('parensAut')


def sierpinski():
    return corpus('sierpinski').automaton('sierpinski')


class TestMonoidalAutomaton:
    def test_should_type_one_sorted_automata(self):
        a = parens_automaton()
        assert a.typed() == (('w',), ('w',))
        assert sierpinski().typed() == ((), ())

    def test_should_require_types_over_many_sorts(self):
        a = MonoidalAutomaton('m', shapes(), ('q',), {'f': {(('q',), ('q',))}}, ('q',), ('q',))
        with pytest.raises(AutomatonException):
            a.typed()
        typed = MonoidalAutomaton(
            'm', shapes(), ('q',), {'f': {(('q',), ('q',))}}, ('q',), ('q',), ('a',), ('a',))
        assert accepts(typed, parse_diagram('f ; f', shapes()))

    def test_should_validate(self):
        assert parens_automaton().validate().ok
        broken = MonoidalAutomaton(
            'broken', braids(), ('q', 'q'),
            {'over': {(('q',), ('q', 'r'))}, 'twist': {(('q',), ('q',))}},
            ('p',), ('q',))
        kinds = broken.validate().kinds()
        assert 'duplicate state' in kinds
        assert 'unknown generator' in kinds
        assert 'transition shape' in kinds
        assert kinds.count('undeclared state') == 2

    def test_should_count_transitions(self):
        assert parens_automaton().transition_count() == 2
        assert sierpinski().transition_count() == 7


class TestAcceptance:
    @pytest.mark.parametrize("text, expected", [
        ('id[w]', True),
        ('open ; close', True),
        ('open ; (open * id[w]) ; (close * id[w]) ; close', True),
        ('open ; close ; open ; close', True),
        ('open ; (id[w] * open) ; (id[w] * close) ; close', False),
    ])
    def test_parentheses(self, text, expected):
        a = parens_automaton()
        assert accepts(a, parse_diagram(text, a.alphabet)) is expected

    @pytest.mark.parametrize("text, expected", [
        ('id', True),
        ('start ; cap ; cap', True),
        ('(vac * start) ; (grey * id[w]) ; (cap * id[w w]) ; (cap * id[w]) ; cap', True),
        ('vac ; cap', False),
        ('start ; white', False),
        ('start ; white ; grey', False),
    ])
    def test_sierpinski(self, text, expected):
        a = sierpinski()
        assert accepts(a, parse_diagram(text, a.alphabet)) is expected

    def test_should_reject_diagrams_of_the_wrong_type(self):
        a = parens_automaton()
        assert not accepts(a, parse_diagram('open', a.alphabet))

    def test_should_reject_diagrams_over_other_alphabets(self):
        with pytest.raises(PolygraphMismatchException):
            accepts(parens_automaton(), Diagram.identity(braids(), ('w',)))

    def test_should_check_state_word_length(self):
        a = parens_automaton()
        with pytest.raises(AutomatonException):
            delta_hat(a, ('S', 'S'), Diagram.identity(a.alphabet, ('w',)))


class TestDeltaHat:
    @pytest.mark.parametrize("name", ['parensAut', 'sierpinski'])
    def test_should_agree_with_frontier_evaluation(self, name):
        a = corpus('parens' if name == 'parensAut' else 'sierpinski').automaton(name)
        rng = Random(name)
        for _ in range(500):
            width = rng.randint(0, 3)
            q = tuple(rng.choice(a.states) for _ in range(width))
            d = random_diagram(a.alphabet, rng, rng.randint(0, 7), a.alphabet.sorts * width)
            assert delta_hat(a, q, d) == run(a, q, d)

    @pytest.mark.parametrize("seed", range(5))
    def test_should_be_invariant_under_interchange(self, seed):
        a = sierpinski()
        rng = Random(seed)
        for _ in range(100):
            width = rng.randint(0, 3)
            q = tuple(rng.choice(a.states) for _ in range(width))
            d = random_diagram(a.alphabet, rng, rng.randint(0, 7), a.alphabet.sorts * width)
            moved = shuffle_interchanges(d, rng, 20)
            assert delta_hat(a, q, d) == delta_hat(a, q, moved)
            assert delta_hat(a, q, d) == delta_hat(a, q, d.canonical())

    @pytest.mark.parametrize("name", ['parensAut', 'sierpinski'])
    def test_should_split_tensors_into_independent_runs(self, name):
        a = corpus('parens' if name == 'parensAut' else 'sierpinski').automaton(name)
        rng = Random(f'{name}-tensor')
        for _ in range(200):
            widths = rng.randint(0, 2), rng.randint(0, 2)
            q1, q2 = (tuple(rng.choice(a.states) for _ in range(n)) for n in widths)
            first, second = (
                random_diagram(a.alphabet, rng, rng.randint(0, 4), a.alphabet.sorts * n)
                for n in widths)
            expected = {
                r1 + r2 for r1 in delta_hat(a, q1, first) for r2 in delta_hat(a, q2, second)}
            assert delta_hat(a, q1 + q2, first @ second) == expected

    def test_should_find_the_first_uncrossed_cut(self):
        d = parse_diagram('(open * id[w]) ; (id[w] * close)', parens())
        assert tensor_split(d.slices, 2) is None
        side_by_side = parse_diagram('open * (open ; close)', parens())
        cut, left, right = tensor_split(side_by_side.slices, 2)
        assert cut == 1
        assert [s.key() for s in left] == [(0, 'open', 0)]
        assert [s.key() for s in right] == [(0, 'open', 0), (0, 'close', 0)]
