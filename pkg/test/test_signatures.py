import pytest
from hypothesis import given, strategies as st

from moncat.exceptions import (
    MorphismException, SignatureException, UnknownGeneratorException, UnknownSortException)
from moncat.signatures import (
    Doctrine, Generator, Multigraph, MultigraphMorphism, Operation, Polygraph,
    PolygraphMorphism, clique, format_word, representative, validate_multigraph,
    validate_polygraph, word)
from moncat.signatures.structural import parse_structural_name, structural_generator
from moncat.signatures.symmetric import (
    identity_permutation, inverse, is_permutation, permute, product)
from test.mocks.corpus import braids, parens, terms


def permutations(n: int):
    return st.permutations(list(range(n))).map(tuple)


class TestPolygraph:
    def test_should_split_words_on_whitespace(self):
        assert word('a b', 'c') == ('a', 'b', 'c')
        assert format_word(()) == 'ε'

    def test_should_find_declared_generators(self):
        p = parens()
        assert p.generator('open').coarity == ('w', 'w')
        assert p.find('copy[w]') is None

    def test_should_raise_on_unknown_generator(self):
        with pytest.raises(UnknownGeneratorException):
            parens().generator('swap')

    def test_should_check_words(self):
        with pytest.raises(UnknownSortException):
            parens().check_word(('w', 'v'))

    def test_should_synthesize_structural_generators(self):
        p = terms()
        copy = p.generator('copy[t]')
        assert (copy.arity, copy.coarity) == (('t',), ('t', 't'))
        assert copy.kind is Generator.Kind.STRUCTURAL
        assert p.find('copy[u]') is None
        assert p.find('mu[t]') is None

    def test_should_switch_doctrine(self):
        p = parens().with_doctrine(Doctrine.HYPERGRAPH)
        assert p.generator('mu[w]').arity == ('w', 'w')
        assert p.generator('eta[w]').arity == ()

    def test_should_extend_with_generators(self):
        p = parens().extend([Generator('dot', (), ('w',))], name='dotted')
        assert p.name == 'dotted'
        assert [g.name for g in p.generators] == ['open', 'close', 'dot']

    @pytest.mark.parametrize("name,expected", [
        ('swap[a,b]', ('swap', ('a', 'b'))),
        ('copy[X^L]', ('copy', ('X^L',))),
        ('open', None),
    ])
    def test_should_parse_structural_names(self, name, expected):
        assert parse_structural_name(name) == expected

    def test_should_reject_structural_generators_of_wrong_arity(self):
        assert structural_generator(Doctrine.CARTESIAN, 'swap[a]') is None
        assert structural_generator(Doctrine.FREE, 'copy[a]') is None


class TestValidation:
    def test_should_accept_valid_polygraph(self):
        assert validate_polygraph(braids()).ok

    def test_should_collect_all_issues(self):
        p = Polygraph('bad', ('a', 'a'), (
            Generator('f', ('a',), ('b',)),
            Generator('f', (), ('a',)),
        ))
        report = validate_polygraph(p)
        assert not report.ok
        assert sorted(report.kinds()) == ['duplicate name', 'duplicate sort', 'undeclared sort']
        with pytest.raises(SignatureException):
            report.raise_for_issues()

    def test_should_validate_multigraphs(self):
        m = Multigraph('m', ('S',), (Operation('r', ('S', 'T'), 'S'),))
        assert validate_multigraph(m).kinds() == ['undeclared sort']

    def test_should_render_report(self):
        report = validate_polygraph(braids())
        assert str(report) == 'braids: ok'


class TestPermutations:
    @given(permutations(5), permutations(5), permutations(5))
    def test_product_should_be_associative(self, a, b, c):
        assert product(product(a, b), c) == product(a, product(b, c))

    @given(permutations(4))
    def test_inverse_should_cancel(self, sigma):
        identity = identity_permutation(4)
        assert product(sigma, inverse(sigma)) == identity
        assert product(inverse(sigma), sigma) == identity

    @given(permutations(4), permutations(4))
    def test_permute_should_compose(self, sigma, tau):
        items = ('a', 'b', 'c', 'd')
        assert permute(permute(items, sigma), tau) == permute(items, product(sigma, tau))

    def test_should_recognize_permutations(self):
        assert is_permutation((2, 0, 1))
        assert not is_permutation((0, 0, 1))


class TestClique:
    def setup_method(self, method):
        self.m = Multigraph('m', ('A', 'B', 'C'), (
            Operation('f', ('A', 'B', 'C'), 'A'),
            Operation('k', (), 'B'),
        ))

    @given(permutations(3), permutations(3), permutations(3))
    def test_action_should_compose(self, sigma, tau, rho):
        s = clique(self.m)
        element = s.element('f', rho)
        assert s.act(product(sigma, tau), element) == s.act(tau, s.act(sigma, element))

    @given(permutations(3))
    def test_identity_should_act_trivially(self, rho):
        s = clique(self.m)
        element = s.element('f', rho)
        assert s.act(identity_permutation(3), element) == element

    @given(permutations(3), permutations(3))
    def test_action_should_permute_inputs(self, sigma, rho):
        s = clique(self.m)
        element = s.element('f', rho)
        assert s.act(sigma, element).inputs == permute(element.inputs, sigma)

    def test_should_list_orbits(self):
        s = clique(self.m)
        assert s.orbit_size('f') == 6
        assert len(list(s.orbit('f'))) == 6
        assert [e.name for e in s.orbit('k')] == ['k']
        assert {e.inputs for e in s.orbit('f')} == {
            ('A', 'B', 'C'), ('A', 'C', 'B'), ('B', 'A', 'C'),
            ('B', 'C', 'A'), ('C', 'A', 'B'), ('C', 'B', 'A')}

    def test_should_reject_invalid_permutations(self):
        with pytest.raises(SignatureException):
            clique(self.m).element('f', (0, 0, 1))

    def test_representative_should_follow_choice(self):
        chosen = representative(clique(self.m), {'f': (2, 0, 1)})
        assert chosen.operation('f').inputs == ('C', 'A', 'B')
        assert representative(clique(self.m)) == self.m


class TestMorphisms:
    def test_identity_should_validate(self):
        assert PolygraphMorphism.identity(braids()).validate().ok

    def test_should_report_interface_mismatch(self):
        p = braids()
        morphism = PolygraphMorphism(p, parens(), {'w': 'w'}, {'over': 'open', 'under': 'close'})
        assert morphism.validate().kinds() == ['interface mismatch', 'interface mismatch']

    def test_should_compose_morphisms(self):
        p = braids()
        swap = PolygraphMorphism(p, p, {'w': 'w'}, {'over': 'under', 'under': 'over'})
        twice = swap.compose(swap)
        assert twice.gen_map == {'over': 'over', 'under': 'under'}

    def test_should_not_compose_unrelated_morphisms(self):
        with pytest.raises(MorphismException):
            PolygraphMorphism.identity(braids()).compose(PolygraphMorphism.identity(parens()))

    def test_should_raise_on_unmapped_sort(self):
        morphism = PolygraphMorphism(braids(), braids(), {}, {})
        with pytest.raises(MorphismException):
            morphism.apply_word(('w',))

    def test_multigraph_morphisms_should_compose_associatively(self):
        m = Multigraph('m', ('S',), (Operation('a', ('S',), 'S'), Operation('b', (), 'S')))
        flip = MultigraphMorphism(m, m, {'S': 'S'}, {'a': 'a', 'b': 'b'})
        identity = MultigraphMorphism.identity(m)
        assert flip.validate().ok
        left = flip.compose(identity).compose(flip)
        right = flip.compose(identity.compose(flip))
        assert left == right
