import asyncio
import logging
import typing as t
from concurrent.futures import ProcessPoolExecutor

from pydantic_settings import BaseSettings as Settings

from .config import HarnessConfig
from .errors import PydanticClassRequired

logger = logging.getLogger(__name__)

T = t.TypeVar("T")


class WorkerPool:
    """
    Runs campaign chunks inline or across worker processes.

    Chunk functions must be importable top-level callables so that they
    pickle; results come back in submission order.
    """

    def __init__(self, settings: HarnessConfig):
        if not issubclass(settings.__class__, Settings):
            raise PydanticClassRequired(
                """Worker configuration should be provided from HarnessConfig class, check example below:
         \nfrom palwords import HarnessConfig  \nconf = HarnessConfig(\nTHREADS = 4,\nTHEOREM_MAX_LEN = 12)
         """
            )

        self.threads = settings.THREADS
        self.executor: t.Optional[ProcessPoolExecutor] = None

    async def __aenter__(self):
        if self.threads > 1:
            self.executor = ProcessPoolExecutor(max_workers=self.threads)
            logger.debug("started %d worker processes", self.threads)
        return self

    async def __aexit__(self, exc_type, exc, tb):
        if self.executor is not None:
            self.executor.shutdown(wait=True, cancel_futures=exc_type is not None)
            self.executor = None

    async def map(
        self, fn: t.Callable[..., T], chunks: t.Iterable[t.Tuple[t.Any, ...]]
    ) -> t.List[T]:
        chunks = list(chunks)
        if self.executor is None:
            return [fn(*chunk) for chunk in chunks]
        loop = asyncio.get_running_loop()
        futures = [loop.run_in_executor(self.executor, fn, *chunk) for chunk in chunks]
        return list(await asyncio.gather(*futures))
