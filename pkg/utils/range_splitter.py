"""
Range Splitter Utility
Splits integer index ranges into contiguous chunks for parallel workers
"""

from concurrent.futures import ThreadPoolExecutor


class RangeSplitter:
    """Split an inclusive integer range [start, end] across workers"""

    def __init__(self, start, end):
        """
        Initialize range splitter

        Args:
            start (int): First index (inclusive)
            end (int): Last index (inclusive); may be below start for an empty range
        """
        self.start = start
        self.end = end

    def count_total(self):
        """
        Count indices in range

        Returns:
            int: Number of indices
        """
        return max(0, self.end - self.start + 1)

    def split_for_workers(self, num_workers):
        """
        Split range into contiguous chunks for multiple workers

        Chunks are ordered and disjoint; the last chunk takes the remainder.
        Empty chunks are dropped.

        Args:
            num_workers (int): Number of workers to split work across

        Returns:
            list: List of (chunk_start, chunk_end) tuples, inclusive
        """
        total = self.count_total()
        if total == 0:
            return []
        num_workers = max(1, min(num_workers, total))
        chunk_size = total // num_workers

        chunks = []
        for i in range(num_workers):
            chunk_start = self.start + i * chunk_size
            if i == num_workers - 1:
                chunk_end = self.end
            else:
                chunk_end = chunk_start + chunk_size - 1
            chunks.append((chunk_start, chunk_end))

        return chunks


def ordered_map(func, chunks, threads=1):
    """
    Apply func to every chunk and return results in chunk order

    With threads <= 1 the chunks run inline; otherwise a thread pool is used.
    Result order never depends on completion order, so reductions over the
    returned list are deterministic.

    Args:
        func (callable): Worker function taking one chunk
        chunks (list): Work items
        threads (int): Parallelism degree

    Returns:
        list: Results, one per chunk
    """
    if threads <= 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in chunks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, chunks))
