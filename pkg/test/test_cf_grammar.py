from collections import Counter
from itertools import product

import pytest

from moncat.contextfree import (
    CFMonoidalGrammar, Derivation, Rule, cf_language, check_derivation, enumerate_derivations,
    evaluate_derivation, language_keys, validate_grammar)
from moncat.diagrams import hole_context, make_context, parse_diagram, parse_expression
from moncat.exceptions import GrammarException, WorkLimitExceededException
from moncat.regular import enumerate_regular
from moncat.utils.budget import WorkBudget
from test.mocks.corpus import braids, corpus

WW = (('w', 'w'), ('w', 'w'))


def unbraids():
    return corpus('unbraids').grammar('unbraids')


def parens_cfg():
    return corpus('parens').grammar('parensCfg')


def _word(d):
    return ''.join({'over': 'o', 'under': 'u'}[s.generator.name] for s in d.slices)


class TestGrammar:
    @pytest.mark.parametrize("name, grammar", [
        ('parens', 'parensCfg'), ('brackets', 'dyck'), ('unbraids', 'unbraids'), ('tree', 'tree'),
        ('tree', 'forest'), ('cfg-hyper', 'program')])
    def test_corpus_grammars_should_be_valid(self, name, grammar):
        report = validate_grammar(corpus(name).grammar(grammar))
        assert report.ok, str(report)

    def test_rules_should_read_their_inputs_from_hole_sorts(self):
        g = unbraids()
        r1 = g.rule('r1')
        assert r1.inputs == ('S', 'S')
        assert r1.arity == 2
        assert [r.name for r in g.rules_for('S')] == ['r0', 'r1', 'r2']
        assert g.start_interface == WW

    def test_should_expose_the_multigraph_of_rules(self):
        m = unbraids().multigraph()
        assert m.sorts == ('S',)
        assert [(op.name, op.inputs, op.output) for op in m.operations] == [
            ('r0', (), 'S'), ('r1', ('S', 'S'), 'S'), ('r2', ('S', 'S'), 'S')]
        assert unbraids().symmetric().orbit_size('r1') == 2

    def test_should_report_every_problem(self):
        p = braids()
        narrow = hole_context(p, 'x1', ('w',), ('w',), 'T')
        single = hole_context(p, 'x1', ('w', 'w'), ('w', 'w'), 'S')
        g = CFMonoidalGrammar(
            'bad', p,
            {'S': WW, 'T': (('w',), ('w',)), 'V': (('v',), ())},
            (
                Rule.of('a', 'S', narrow),
                Rule('b', 'S', ('S', 'S'), single),
                Rule.of('c', 'X', single),
                Rule.of('c', 'S', make_context(parse_diagram('over', p))),
            ),
            'Q',
        )
        kinds = validate_grammar(g).kinds()
        assert 'unknown start' in kinds
        assert 'undeclared sort' in kinds
        assert 'interface mismatch' in kinds
        assert 'hole count' in kinds
        assert 'unknown nonterminal' in kinds
        assert 'duplicate name' in kinds

    def test_should_reject_unknown_rules_and_start(self):
        g = unbraids()
        with pytest.raises(GrammarException):
            g.rule('r9')
        bad = CFMonoidalGrammar('bad', g.target, g.interfaces, g.rules, 'Q')
        with pytest.raises(GrammarException):
            bad.start_interface


class TestDerivations:
    def test_should_count_unbraid_derivations_by_size(self):
        found = enumerate_derivations(unbraids(), max_rules=5)
        counts = Counter(d.size for d in found)
        assert [counts[n] for n in range(1, 6)] == [1, 0, 2, 0, 8]

    def test_should_order_and_render(self):
        found = enumerate_derivations(unbraids(), max_rules=3)
        assert [d.render() for d in found] == ['r0', 'r1(r0, r0)', 'r2(r0, r0)']
        assert str(found[1]) == 'r1(r0, r0)'
        assert [n.rule for n in found[1].nodes()] == ['r1', 'r0', 'r0']

    def test_should_evaluate_by_substitution(self):
        g = unbraids()
        d = Derivation('r1', 'S', (Derivation('r0', 'S'), Derivation('r0', 'S')))
        assert evaluate_derivation(g, d).key() == parse_diagram('over ; under', g.target).key()

    def test_should_evaluate_nested_derivations(self):
        g = unbraids()
        leaf = Derivation('r0', 'S')
        inner = Derivation('r2', 'S', (leaf, leaf))
        d = Derivation('r1', 'S', (inner, leaf))
        expected = parse_diagram('over ; under ; over ; under', g.target)
        assert evaluate_derivation(g, d).key() == expected.key()

    def test_should_check_derivations(self):
        g = unbraids()
        leaf = Derivation('r0', 'S')
        check_derivation(g, Derivation('r1', 'S', (leaf, leaf)))
        with pytest.raises(GrammarException):
            check_derivation(g, Derivation('r1', 'S', (leaf,)))
        with pytest.raises(GrammarException):
            check_derivation(g, Derivation('r0', 'T'))
        with pytest.raises(GrammarException):
            check_derivation(g, Derivation('r1', 'S', (leaf, Derivation('r0', 'T'))))
        with pytest.raises(GrammarException):
            check_derivation(g, Derivation('r7', 'S'))

    def test_should_respect_the_work_budget(self):
        with pytest.raises(WorkLimitExceededException):
            enumerate_derivations(unbraids(), max_rules=7, budget=WorkBudget(20))

    def test_evaluation_should_keep_the_start_interface(self):
        g = parens_cfg()
        for d in enumerate_derivations(g, max_rules=5):
            diagram = evaluate_derivation(g, d)
            assert (diagram.domain, diagram.codomain) == g.start_interface


class TestLanguage:
    def test_unbraids_should_count_balanced_words(self):
        counts = Counter(d.generator_count // 2 for d in cf_language(unbraids(), 7))
        assert [counts[n] for n in range(4)] == [1, 2, 6, 20]

    def test_unbraids_should_be_exactly_the_balanced_words(self):
        words = {_word(d) for d in cf_language(unbraids(), 9)}
        expected = {
            ''.join(w) for n in range(5) for w in product('ou', repeat=2 * n)
            if w.count('o') == n}
        assert words == expected

    def test_dyck_should_be_exactly_the_balanced_bracket_words(self):
        def balanced(w):
            depth = 0
            for c in w:
                depth += 1 if c == '(' else -1
                if depth < 0:
                    return False
            return depth == 0

        words = [
            ''.join({'lp': '(', 'rp': ')'}[s.generator.name] for s in d.slices)
            for d in cf_language(corpus('brackets').grammar('dyck'), 9)]
        expected = {
            ''.join(w) for n in range(5) for w in product('()', repeat=2 * n) if balanced(w)}
        assert len(words) == len(expected)
        assert set(words) == expected

    def test_parens_cfg_should_match_the_automaton(self):
        regular = enumerate_regular(corpus('parens').automaton('parensAut'), 8)
        assert language_keys(parens_cfg(), 9) == {d.key() for d in regular}

    def test_should_quotient_by_the_doctrine(self):
        found = cf_language(corpus('tree').grammar('tree'), 3)
        assert [d.generator_count for d in found] == [3, 5]

    def test_positional_rule_contexts_should_match_the_text(self):
        g = parens_cfg()
        ctx = parse_expression(
            'open ; ([S] * id[w]) ; close ; [S]', g.target,
            holes={'S': g.interfaces['S']}, positional=True)
        assert g.rule('r1').context.key() == ctx.key()
