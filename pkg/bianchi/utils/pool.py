"""本模块提供了按输入顺序收集结果的进程池"""

from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor


def parallel_map[T, R](
    func: Callable[[T], R], items: Iterable[T], *, workers: int = 1
) -> list[R]:
    """并行映射，结果顺序与输入顺序一致。

    ### 参数
        func: 可被 pickle 的顶层函数

        items: 输入序列

        workers: 进程数，小于等于 1 时在当前进程内顺序执行
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(func, items))
