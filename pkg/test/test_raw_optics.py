import pytest

from moncat.contextfree import enumerate_derivations, evaluate_derivation
from moncat.diagrams import (
    Diagram, contexts_equal, make_context, parse_diagram, parse_expression, permute_holes,
    substitute)
from moncat.doctrines import doctrine_key
from moncat.exceptions import FactorizationException, InterfaceMismatchException
from moncat.optics import (
    RawOptic, evaluate_raw, factor_context, glue, glued_equal, identity_optic, raw_compose,
    raw_optic_equal, raw_representative)
from test.mocks.corpus import braids, corpus, parens

W = (('w',), ('w',))

GRAMMARS = [
    ('parens', 'parensCfg'), ('unbraids', 'unbraids'), ('tree', 'tree'), ('tree', 'forest'),
    ('cfg-hyper', 'program')]


def unbraids():
    return corpus('unbraids').grammar('unbraids')


class TestFactorContext:
    def test_should_split_at_holes(self):
        optic = factor_context(unbraids().rule('r1').context)
        p = braids()
        assert optic.arity == 2
        assert [c.syntax() for c in optic.components] == [
            Diagram.of_generator(p, 'over').syntax(),
            Diagram.of_generator(p, 'under').syntax(),
            Diagram.identity(p, ('w', 'w')).syntax()]
        assert optic.pads == (((), ()), ((), ()))
        assert optic.sorts == ('S', 'S')

    def test_should_record_pads(self):
        optic = factor_context(corpus('parens').grammar('parensCfg').rule('r1').context)
        assert optic.pads == (((), ('w',)), ((), ()))
        assert optic.holes == (W, W)
        assert [c.generator_count for c in optic.components] == [1, 1, 0]

    def test_should_follow_the_declared_hole_order(self):
        ctx = parse_expression('[x] * [y]', parens(), holes={'x': W, 'y': W})
        optic = factor_context(permute_holes(ctx, (1, 0)))
        assert optic.pads == ((('w',), ()), ((), ('w',)))
        assert contexts_equal(glue(optic), permute_holes(ctx, (1, 0)))

    def test_should_reject_orders_against_the_wires(self):
        ctx = parse_expression('[x] ; [y]', parens(), holes={'x': W, 'y': W})
        with pytest.raises(FactorizationException):
            factor_context(permute_holes(ctx, (1, 0)))

    def test_closed_contexts_should_give_one_component(self):
        d = parse_diagram('open ; close', parens())
        optic = factor_context(make_context(d))
        assert optic.arity == 0
        assert optic.components[0].key() == d.key()

    @pytest.mark.parametrize("name, grammar", GRAMMARS)
    def test_glue_should_invert_factoring(self, name, grammar):
        g = corpus(name).grammar(grammar)
        multigraph, optics = raw_representative(g)
        assert [op.name for op in multigraph.operations] == [r.name for r in g.rules]
        for r in g.rules:
            assert contexts_equal(glue(optics[r.name]), r.context)


class TestRawOptic:
    def test_should_check_its_shape(self):
        p = parens()
        with pytest.raises(FactorizationException):
            RawOptic((Diagram.identity(p, ('w',)),), (((), ()),), (W,))
        with pytest.raises(InterfaceMismatchException):
            RawOptic(
                (Diagram.of_generator(p, 'open'), Diagram.identity(p, ('w',))),
                (((), ()),), (W,))

    def test_identity_optic_should_be_a_unit(self):
        optic = factor_context(unbraids().rule('r1').context)
        unit = identity_optic(braids(), ('w', 'w'), ('w', 'w'), 'S')
        assert raw_optic_equal(raw_compose(unit, optic, 0), optic)
        assert raw_optic_equal(raw_compose(optic, unit, 0), optic)

    def test_should_compose_like_substitution(self):
        g = corpus('parens').grammar('parensCfg')
        outer = factor_context(g.rule('r1').context)
        inner = factor_context(g.rule('r1').context)
        composed = raw_compose(inner, outer, 0)
        assert composed.arity == 3
        assert composed.pads == (((), ('w', 'w')), ((), ('w',)), ((), ()))
        leaf = factor_context(g.rule('r0').context)
        filled = raw_compose(leaf, outer, 1)
        assert filled.arity == 1
        expected = substitute(g.rule('r1').context, {'x2': g.rule('r0').context})
        assert contexts_equal(glue(filled), expected)
        assert glued_equal(filled, factor_context(expected))

    def test_should_reject_bad_holes(self):
        g = corpus('parens').grammar('parensCfg')
        outer = factor_context(g.rule('r1').context)
        with pytest.raises(FactorizationException):
            raw_compose(outer, outer, 2)
        wide = identity_optic(parens(), ('w', 'w'), ('w', 'w'))
        with pytest.raises(InterfaceMismatchException):
            raw_compose(wide, outer, 0)

    @pytest.mark.parametrize("name, grammar", GRAMMARS)
    def test_evaluation_should_match_substitution(self, name, grammar):
        g = corpus(name).grammar(grammar)
        _, optics = raw_representative(g)
        for d in enumerate_derivations(g, max_rules=4):
            glued = glue(evaluate_raw(g, d, optics)).close()
            assert doctrine_key(glued) == doctrine_key(evaluate_derivation(g, d))

    @pytest.mark.parametrize("name, grammar", GRAMMARS)
    def test_composition_should_glue_to_substitution(self, name, grammar):
        g = corpus(name).grammar(grammar)
        _, optics = raw_representative(g)
        checked = 0
        for outer in optics.values():
            glued = glue(outer)
            for inner in optics.values():
                filler = glue(inner)
                filler = filler.rename({v: f'y{k + 1}' for k, v in enumerate(filler.variables())})
                for index, hole in enumerate(outer.holes):
                    if hole != (inner.domain, inner.codomain):
                        continue
                    expected = substitute(glued, {f'x{index + 1}': filler})
                    assert contexts_equal(glue(raw_compose(inner, outer, index)), expected)
                    checked += 1
        assert checked > 0
