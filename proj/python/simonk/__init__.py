"""Simon congruence toolkit.

Words are Python strings; by default every character is a symbol, and with
``tokens=True`` words are whitespace-separated token sequences instead.
"""

from ._simonk import (
    analyze,
    distinguishing_word,
    k_blocks,
    max_sim_k,
    sim_k,
    tree_dot,
)

__all__ = [
    "analyze",
    "distinguishing_word",
    "k_blocks",
    "max_sim_k",
    "sim_k",
    "tree_dot",
]
