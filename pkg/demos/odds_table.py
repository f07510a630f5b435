"""Score the three classic disruption strategies.

Q prepares a qubit "penny" in a pure state of her choosing, P gets one blind
move to scramble it, and Q then predicts what the state has become.  Q's win
probability is the largest eigenvalue of the scrambled state, and the fair
payout odds follow directly from it.

Each strategy has a closed form; this script prints it next to a seeded
Monte Carlo replay of the same channel as a cross-check.
"""

import numpy as np

from pennyflip import RngStream, default_strategies, play_game


def main():
    print("strategy                                   q_win      odds   MC q_win   |diff|")
    print("-" * 82)
    for index, strategy in enumerate(default_strategies()):
        exact = play_game(strategy)
        mc = play_game(
            strategy, mode="mc", samples=100_000, rng=RngStream(0, index)
        )
        diff = abs(mc.q_win_probability - exact.q_win_probability)
        print(
            f"{strategy.label:<40} {exact.q_win_probability:8.6f}  {exact.odds_string:>6}"
            f"   {mc.q_win_probability:8.6f}   {diff:.1e}"
        )
    print()
    print("Reading the table:")
    print(" * Knowing the rotation lets Q open in one of its eigenstates, so the")
    print("   rotate-or-leave mixture never moves the penny and Q always wins (1:0).")
    print(" * A 120-degree rotation about a uniformly random axis leaves the fully")
    print("   mixed state: a fair coin toss (1:1).")
    print(" * Measuring along a random axis only shrinks the polarization to 1/3,")
    print("   so Q still wins two rounds out of three (2:1).")

    post = play_game(default_strategies()[2]).post_channel_state
    print()
    print("Post-measurement state for the third strategy:")
    print(np.array_str(post.real, precision=6, suppress_small=True))


if __name__ == "__main__":
    main()
