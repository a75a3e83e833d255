from .parallel_init import init
from .verifier import ParallelVerifier
