from moncat.utils.logger.printers.level import LevelPrinter
from moncat.utils.logger.printers.message import MessagePrinter
from moncat.utils.logger.printers.stage import StagePrinter
from moncat.utils.logger.printers.subject import SubjectPrinter
from moncat.utils.logger.printers.timestamp import TimestampPrinter
from moncat.utils.logger.printers.worker import WorkerPrinter
from moncat.utils.logger.printers.workspace import WorkspacePrinter

__all__ = [
    'LevelPrinter',
    'MessagePrinter',
    'StagePrinter',
    'SubjectPrinter',
    'TimestampPrinter',
    'WorkerPrinter',
    'WorkspacePrinter',
]
