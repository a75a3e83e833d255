from moncat.utils.logger.logger import MoncatLogger

__all__ = ['MoncatLogger']
