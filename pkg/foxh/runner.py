""" 독립 계산을 스레드 풀에서 실행하는 헬퍼 """
import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Any, Callable, List, Optional, Sequence

__all__ = ("gather_in_pool", "DEFAULT_WORKERS")

logger = logging.getLogger(__name__)

DEFAULT_WORKERS: int = 4


async def _gather(calls: Sequence[Callable[[], Any]], workers: int) -> List[Any]:
    loop = asyncio.get_running_loop()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, partial(call)) for call in calls]
        return list(await asyncio.gather(*futures))


def gather_in_pool(
    calls: Sequence[Callable[[], Any]], workers: Optional[int] = None
) -> List[Any]:
    """ 호출 결과를 제출 순서대로 반환

    workers <= 1 이면 현재 스레드에서 순서대로 실행한다.
    호출 안의 예외는 그대로 전파되므로 호출 쪽에서 결과 객체로 감싸야 한다.
    """
    workers = DEFAULT_WORKERS if workers is None else workers
    if workers <= 1 or len(calls) <= 1:
        return [call() for call in calls]
    logger.debug("running %d calls on %d workers", len(calls), workers)
    try:
        asyncio.get_running_loop()
    except RuntimeError:
        return asyncio.run(_gather(calls, workers))

    # 이미 이벤트 루프 안이면 루프를 거치지 않고 풀에서 직접 기다린다
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return [future.result() for future in [pool.submit(call) for call in calls]]
