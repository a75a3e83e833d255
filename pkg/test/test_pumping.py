import pytest

from moncat.diagrams import Diagram, parse_diagram
from moncat.exceptions import (
    FactorizationException, InterfaceMismatchException, WidthMismatchException)
from moncat.regular import (
    FamilyFactory, Factorization, PumpingFamily, check_family, factorize, pump, pumping_witness)
from moncat.regular.pumping import family, register_builtin_families
from test.mocks.corpus import braids, parens


@pytest.fixture
def clean_factory():
    yield FamilyFactory
    FamilyFactory.unregister()
    register_builtin_families()


class TestFactorization:
    def test_should_split_into_slices(self):
        d = parse_diagram('open ; (open * id[w]) ; (close * id[w]) ; close', parens())
        fact = factorize(d)
        assert len(fact) == 4
        assert fact.widths == (1, 2, 3, 2, 1)
        assert fact.composite().syntax() == d.syntax()
        assert fact.segment(1, 1).is_identity

    def test_should_reject_identities_and_gaps(self):
        p = parens()
        with pytest.raises(FactorizationException):
            Factorization(())
        with pytest.raises(FactorizationException):
            Factorization((Diagram.identity(p, ('w',)),))
        with pytest.raises(InterfaceMismatchException):
            Factorization((Diagram.of_generator(p, 'open'), Diagram.of_generator(p, 'open')))

    def test_should_pump_a_segment(self):
        p = braids()
        over = Diagram.of_generator(p, 'over')
        under = Diagram.of_generator(p, 'under')
        fact = Factorization((over, under, over))
        assert pump(fact, 1, 2, 0).syntax() == (over >> over).syntax()
        assert pump(fact, 1, 2, 3).generator_count == 5
        assert pump(fact, 0, 3, 1).syntax() == fact.composite().syntax()

    def test_should_reject_bad_cut_points(self):
        fact = factorize(parse_diagram('open ; close', parens()))
        with pytest.raises(WidthMismatchException):
            pump(fact, 0, 1, 2)
        with pytest.raises(FactorizationException):
            pump(fact, 1, 1, 2)
        with pytest.raises(FactorizationException):
            pump(fact, 0, 3, 2)


class TestPumpingWitness:
    def test_unbraids_should_have_a_witness(self):
        report = check_family('unbraids', 6)
        assert report.witness_found
        assert report.cases[0].pairs == []
        assert all(case.violates_all for case in report.cases[1:])
        assert report.lines()[-1] == 'PUMP unbraids k=2 witness=true'

    def test_parens_should_survive_pumping(self):
        report = check_family('parens', 6)
        assert not report.witness_found
        assert report.cases[1].pairs == []
        assert (1, 3) in report.cases[2].surviving
        assert report.lines()[-1] == 'PUMP parens k=2 witness=false'

    def test_should_skip_cuts_wider_than_k(self):
        p = parens()
        fact = factorize(parse_diagram(
            'open ; (open * id[w]) ; (id[w w] * open) ; (id[w w] * close) '
            '; (close * id[w]) ; close', p))
        assert fact.widths == (1, 2, 3, 4, 3, 2, 1)
        report = pumping_witness(lambda d: True, 2, lambda n: fact, 0)
        assert report.cases[0].pairs == [(1, 5)]

    def test_should_report_vacuous_families(self):
        report = pumping_witness(lambda d: True, 2, lambda n: None, 2, name='empty')
        assert not report.witness_found
        assert report.lines() == [
            'n=0 pairs=0 vacuous', 'n=1 pairs=0 vacuous', 'n=2 pairs=0 vacuous',
            'PUMP empty k=2 witness=false']

    def test_should_use_exponents_in_order(self):
        report = check_family('unbraids', 2, exponents=(2, 0))
        assert all(a == 2 for _, _, a in report.cases[1].violations)


class TestFamilyFactory:
    def test_should_know_builtin_families(self):
        assert set(FamilyFactory.family_references) >= {'unbraids', 'parens'}
        assert isinstance(FamilyFactory.create('parens'), PumpingFamily)

    def test_should_register_with_decorator(self, clean_factory):
        @family('loops')
        class Loops(PumpingFamily):
            def factorization(self, n):
                return None

            def member(self, d):
                return True

        assert FamilyFactory.get('loops') is Loops
        assert not check_family('loops', 1).witness_found

    def test_should_reject_non_families(self, clean_factory):
        with pytest.raises(TypeError):
            FamilyFactory.register('bad', object)
        with pytest.raises(TypeError):
            FamilyFactory.register(1, PumpingFamily)

    def test_should_unregister(self, clean_factory):
        FamilyFactory.unregister('parens')
        with pytest.raises(KeyError):
            FamilyFactory.create('parens')
        with pytest.warns(UserWarning):
            FamilyFactory.unregister('parens')
        FamilyFactory.unregister()
        assert FamilyFactory.family_references == {}
