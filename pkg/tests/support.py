"""Shared random generators for the test suite.

Everything takes an explicit random.Random so runs are reproducible.
"""

from bsfour import bsgroup
from bsfour.groupring import GroupRingElt


def random_word(rng, maxlen=40):
    n = rng.randint(0, maxlen)
    return "".join(rng.choice("aAbB") for _ in range(n))


def random_element(rng, k, wordlen=12):
    return bsgroup.eval_word(random_word(rng, wordlen), k)


def random_ring_elt(rng, k, terms=6, wordlen=8, cmax=9):
    p = GroupRingElt.zero(k)
    for _ in range(rng.randint(0, terms)):
        c = rng.randint(-cmax, cmax)
        p = p + GroupRingElt.monomial(k, random_element(rng, k, wordlen), c)
    return p
