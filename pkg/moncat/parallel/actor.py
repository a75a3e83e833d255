from __future__ import annotations

from typing import Optional

import ray

from moncat.contextfree.grammar import CFMonoidalGrammar
from moncat.optics.representation import Side, cf_side, contour_side
from moncat.utils.budget import WorkBudget
from moncat.utils.logger import MoncatLogger


@ray.remote
class EnumerationActor:
    """ Enumerates one side of a representation check. """

    def __init__(self, *, name: str, index: Optional[int] = None, max_work: Optional[int] = None):
        self.name = name
        self.index = index
        self.max_work = max_work
        self._logger = MoncatLogger()

    async def bootstrap(self, logger: MoncatLogger):
        self._logger = logger.chain(
            worker=MoncatLogger.Parts.Worker(name=self.name, index=self.index),
        )

    async def cf_side(self, grammar: CFMonoidalGrammar, bound: int) -> Side:
        self._logger.info(f'Deriving {grammar.name}')
        return cf_side(grammar, bound, budget=WorkBudget(self.max_work), logger=self._logger)

    async def contour_side(self, grammar: CFMonoidalGrammar, bound: int) -> Side:
        self._logger.info(f'Walking the contour of {grammar.name}')
        return contour_side(grammar, bound, budget=WorkBudget(self.max_work), logger=self._logger)
