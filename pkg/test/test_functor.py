from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from moncat.diagrams import Diagram, parse_diagram, parse_expression
from moncat.exceptions import DoctrineException, MorphismException, PolygraphMismatchException
from moncat.optics import MonoidalFunctor, apply_functor, apply_functor_context
from test.mocks.corpus import braids, parens, shapes, terms
from test.mocks.random_diagrams import random_diagram


def doubling():
    p = parens()
    return MonoidalFunctor(p, p, {'w': ('w', 'w')}, {
        name: Diagram.of_generator(p, name) @ Diagram.of_generator(p, name)
        for name in ('open', 'close')})


def doubling_braids():
    p = braids()
    return MonoidalFunctor(p, p, {'w': ('w', 'w')}, {
        name: Diagram.of_generator(p, name) @ Diagram.of_generator(p, name)
        for name in ('over', 'under')})


FUNCTORS = {'parens': doubling, 'braids': doubling_braids}


class TestMonoidalFunctor:
    def test_identity_should_keep_diagrams(self):
        p = shapes()
        f = MonoidalFunctor.identity(p)
        rng = Random(7)
        for _ in range(50):
            d = random_diagram(p, rng, rng.randint(0, 6), ('a', 'b'))
            assert apply_functor(f, d).syntax() == d.syntax()

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from(sorted(FUNCTORS)), st.integers(0, 10 ** 6))
    def test_should_preserve_composition_and_tensor(self, name, seed):
        f = FUNCTORS[name]()
        p = f.source
        rng = Random(seed)
        first = random_diagram(p, rng, rng.randint(0, 5), ('w',) * rng.randint(1, 3))
        second = random_diagram(p, rng, rng.randint(0, 5), first.codomain)
        assert apply_functor(f, first >> second).key() == (
            apply_functor(f, first) >> apply_functor(f, second)).key()
        assert apply_functor(f, first @ second).key() == (
            apply_functor(f, first) @ apply_functor(f, second)).key()

    def test_should_whisker_images(self):
        f = doubling()
        d = parse_diagram('(id[w] * open) ; (close * id[w])', f.source)
        image = apply_functor(f, d)
        assert (image.domain, image.codomain) == (('w',) * 4, ('w',) * 4)
        assert [s.key() for s in image.slices] == [
            (2, 'open', 1), (4, 'open', 0), (0, 'close', 4), (1, 'close', 2)]

    def test_should_map_structural_generators(self):
        p = terms()
        f = MonoidalFunctor(p, p, {'t': ('t',)}, {
            'f': Diagram.of_generator(p, 'f'),
            'g': Diagram.identity(p, ('t',)),
            'x': Diagram.of_generator(p, 'x')})
        image = apply_functor(f, parse_diagram('copy[t] ; (g * del[t])', p))
        assert [g.name for g in image.generators()] == ['copy[t]', 'del[t]']

    def test_should_refuse_structure_on_split_sorts(self):
        p = terms()
        f = MonoidalFunctor(p, p, {'t': ('t', 't')}, {})
        with pytest.raises(DoctrineException):
            apply_functor(f, parse_diagram('copy[t]', p))

    def test_should_carry_holes(self):
        f = doubling()
        ctx = parse_expression('open ; [x]', f.source, holes={'x': (('w', 'w'), ('w',))})
        image = apply_functor_context(f, ctx)
        assert image.hole('x').domain == ('w',) * 4
        assert image.hole('x').codomain == ('w', 'w')
        assert image.diagram.slices[-1].generator.is_hole

    def test_should_validate(self):
        assert doubling().validate().ok
        p = parens()
        broken = MonoidalFunctor(p, braids(), {'w': ('v',)}, {
            'open': Diagram.of_generator(braids(), 'over')})
        kinds = broken.validate().kinds()
        assert 'undeclared sort' in kinds
        assert 'unmapped generator' in kinds
        assert 'interface mismatch' in kinds

    def test_should_reject_unmapped_names(self):
        p = parens()
        f = MonoidalFunctor(p, p, {}, {})
        with pytest.raises(MorphismException):
            f.apply_word(('w',))
        g = MonoidalFunctor(p, p, {'w': ('w',)}, {})
        with pytest.raises(MorphismException):
            apply_functor(g, parse_diagram('open', p))
        with pytest.raises(PolygraphMismatchException):
            apply_functor(g, Diagram.identity(braids(), ('w',)))
