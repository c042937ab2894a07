import random

import pytest

from mcgc.sequences import ColorSequence, window_starts


def naive_distinguishable(seq, m):
    """Quadratic oracle: compare sorted window contents pairwise.

    Independent of the count-vector path used by the library checker.
    """
    n = len(seq)
    windows = []
    for t in window_starts(seq, m):
        if seq.mode == "cyclic":
            win = sorted(seq.colors[(t + i) % n] for i in range(m))
        else:
            win = sorted(seq.colors[t : t + m])
        windows.append(win)
    for i in range(len(windows)):
        for j in range(i + 1, len(windows)):
            if windows[i] == windows[j]:
                return False, (i, j)
    return True, None


def random_sequence(rng: random.Random, max_len=30, max_k=6, mode="cyclic"):
    k = rng.randint(2, max_k)
    n = rng.randint(2, max_len)
    return ColorSequence(tuple(rng.randint(1, k) for _ in range(n)), k, mode)


@pytest.fixture
def rng():
    return random.Random(0xC0DE)
