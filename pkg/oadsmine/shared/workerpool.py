"""Ordered thread pool map that keeps only a few tasks ahead of its consumer."""

# standard modules
import itertools
import collections
import concurrent.futures


# tasks queued per worker ahead of the consumer
READ_AHEAD = 4


def bounded_map(function, items, workers, read_ahead=READ_AHEAD):
    """results of function over items in input order, at most workers * read_ahead submitted but unconsumed"""
    items = iter(items)
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        pending = collections.deque(executor.submit(function, item)
                                    for item in itertools.islice(items, workers * read_ahead))
        while pending:
            result = pending.popleft().result()
            for item in itertools.islice(items, 1):
                pending.append(executor.submit(function, item))
            yield result
