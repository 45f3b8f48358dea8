"""Build counterfactual transitions from random-policy experience and check
each one against the simulator's true mechanism.

    python demos/counterfactual_swap.py
"""

import numpy as np

from imrl.causal import HeuristicDetector, OracleDetector, Transition, counterfactual_swap, independent_components
from imrl.envsim import EnvConfig, RecEnv


def collect(env, rng, n):
    out, state = [], env.reset(0)
    while len(out) < n:
        a = rng.uniform(-1, 1, env.action_dim)
        step = env.step(a)
        out.append(Transition(state, a, step.reward, step.next_state, step.done))
        state = env.reset(len(out)) if step.done else step.next_state
    return out


def main():
    env = RecEnv(EnvConfig())
    rng = np.random.default_rng(0)
    ts = collect(env, rng, 500)
    t = ts[0]
    det = OracleDetector(env)
    print("components outside the action's causal group:", independent_components(t.s, t.a, det).indices)

    for det in (OracleDetector(env), HeuristicDetector.from_env(env)):
        made = valid = 0
        for _ in range(2000):
            i, j = rng.integers(len(ts), size=2)
            tg = counterfactual_swap(ts[i], ts[j], det, rng)
            if tg is not None:
                made += 1
                valid += env.counterfactual_check(tg)
        print(f"{type(det).__name__}: {valid}/{made} swaps are consistent with the simulator")


if __name__ == "__main__":
    main()
