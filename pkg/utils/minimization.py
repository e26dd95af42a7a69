"""
CDFA minimization - partition refinement starting from the blocks of equal terminal degree
"""
import logging
from collections import deque
from typing import Dict, Hashable, List, Sequence

from models.cdfa import Cdfa

logger = logging.getLogger(__name__)


def _number_blocks(keys: Sequence[Hashable]) -> List[int]:
    """Block ids in order of first appearance"""
    ids: Dict[Hashable, int] = {}
    return [ids.setdefault(key, len(ids)) for key in keys]


def minimize_cdfa(c: Cdfa) -> Cdfa:
    """Minimal CDFA recognizing the same fuzzy language as the accessible CDFA c.

    Blocks start as classes of equal terminal degree and are split by the
    blocks of their successors until nothing changes. The quotient is
    numbered breadth-first from the initial block; each block keeps the
    label and provenance of its smallest member.
    """
    block_of = _number_blocks(c.term)
    rounds = 0
    while True:
        rounds += 1
        signatures = [(block_of[s], tuple(block_of[t] for t in c.transitions[s]))
                      for s in range(c.size)]
        refined = _number_blocks(signatures)
        if max(refined) == max(block_of):
            break
        logger.debug("refinement round %d: %d blocks", rounds, max(refined) + 1)
        block_of = refined

    representative: Dict[int, int] = {}
    for state in range(c.size):
        representative.setdefault(block_of[state], state)

    start = block_of[c.initial]
    order = [start]
    position = {start: 0}
    queue = deque([start])
    while queue:
        block = queue.popleft()
        for target in c.transitions[representative[block]]:
            successor = block_of[target]
            if successor not in position:
                position[successor] = len(order)
                order.append(successor)
                queue.append(successor)

    reps = [representative[block] for block in order]
    transitions = [[position[block_of[t]] for t in c.transitions[rep]] for rep in reps]
    provenance = [c.provenance[rep] for rep in reps] if c.provenance is not None else None
    logger.info("minimized %d states to %d", c.size, len(reps))
    return Cdfa(c.lattice, c.alphabet, [c.labels[rep] for rep in reps], transitions, 0,
                [c.term[rep] for rep in reps], provenance)
