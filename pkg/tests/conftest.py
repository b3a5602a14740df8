import random

from hypothesis import settings
from hypothesis import strategies as st

from extshuffle import is_convergent

# first-time cache fills make individual examples spiky; wall-clock deadlines
# would turn that into flakes
settings.register_profile("extshuffle", deadline=None)
settings.load_profile("extshuffle")


def compositions(min_entry=-4, max_entry=4, max_depth=3, min_depth=0):
    return st.lists(
        st.integers(min_entry, max_entry), min_size=min_depth, max_size=max_depth
    ).map(tuple)


def convergent_compositions_strategy(min_entry=-3, max_entry=6, max_depth=3):
    return (
        st.lists(st.integers(min_entry, max_entry), min_size=1, max_size=max_depth)
        .map(tuple)
        .filter(is_convergent)
    )


def random_composition(rng: random.Random, lo, hi, max_depth, min_depth=0):
    d = rng.randint(min_depth, max_depth)
    return tuple(rng.randint(lo, hi) for _ in range(d))


def random_convergent(rng: random.Random, lo, hi, max_depth):
    while True:
        comp = random_composition(rng, lo, hi, max_depth, min_depth=1)
        if is_convergent(comp):
            return comp
