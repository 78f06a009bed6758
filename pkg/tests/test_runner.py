import asyncio
import threading
import time

import pytest

from foxh.runner import gather_in_pool


def delayed(value, delay):
    def call():
        time.sleep(delay)
        return value

    return call


class TestGatherInPool:
    """ 스레드 풀 실행 """

    def test_order_is_preserved(self):
        calls = [delayed(j, 0.02 * (5 - j)) for j in range(5)]
        assert gather_in_pool(calls, workers=5) == [0, 1, 2, 3, 4]

    def test_sequential(self):
        threads = []

        def call():
            threads.append(threading.get_ident())
            return len(threads)

        assert gather_in_pool([call, call, call], workers=1) == [1, 2, 3]
        assert set(threads) == {threading.get_ident()}

    def test_empty(self):
        assert gather_in_pool([], workers=4) == []

    def test_exception_propagates(self):
        def boom():
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            gather_in_pool([boom, delayed(1, 0)], workers=2)

    def test_inside_running_loop(self):
        calls = [delayed(j, 0.01 * (3 - j)) for j in range(3)]

        async def main():
            return gather_in_pool(calls, workers=3)

        assert asyncio.run(main()) == [0, 1, 2]
