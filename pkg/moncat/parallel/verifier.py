from __future__ import annotations

import asyncio
from typing import Optional

from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.optics.representation import RepresentationReport, compare_sides
from moncat.parallel.actor import EnumerationActor
from moncat.utils.logger import MoncatLogger


class ParallelVerifier:
    """ Runs both sides of ``verify_representation`` on separate ray actors.

    ray must be initialized (``moncat.parallel.init``) before the first call.
    """

    def __init__(self, logger: Optional[MoncatLogger] = None, max_work: Optional[int] = None):
        self._logger = logger or MoncatLogger()
        self.max_work = max_work
        self._actors = None

    async def _bootstrap(self):
        self._actors = [
            EnumerationActor.remote(name=name, index=index, max_work=self.max_work)
            for index, name in enumerate(('grammar', 'contour'))
        ]
        await asyncio.gather(*[actor.bootstrap.remote(self._logger) for actor in self._actors])

    async def verify(self, grammar: CFMonoidalGrammar, bound: int) -> RepresentationReport:
        if self._actors is None:
            await self._bootstrap()
        grammar_actor, contour_actor = self._actors
        lhs, rhs = await asyncio.gather(
            grammar_actor.cf_side.remote(grammar, bound),
            contour_actor.contour_side.remote(grammar, bound),
        )
        report = compare_sides(grammar, bound, lhs, rhs)
        self._logger.info(report.summary())
        return report
