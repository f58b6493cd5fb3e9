import random

from dyck4d import DyckWord


def random_valid_word(rng: random.Random, semilength: int) -> DyckWord:
    """Sample one complete word: at each step pick uniformly among the
    feasible continuations.  Not uniform over words, but valid and
    reproducible for a fixed rng."""
    steps = []
    ups = downs = 0
    while downs < semilength:
        can_up = ups < semilength
        can_down = downs < ups
        if can_up and (not can_down or rng.random() < 0.5):
            steps.append("U")
            ups += 1
        else:
            steps.append("D")
            downs += 1
    return DyckWord("".join(steps))
