"""Exact empowerment on the hub world next to what a trained agent's
intrinsic reward has learned about it.

    python demos/hub_empowerment.py [steps]
"""

import sys

import numpy as np

from imrl.empowerment import blahut_arimoto, estimator_correlation, exact_empowerment_map
from imrl.envsim import hub_mdp
from imrl.harness.experiment import train_hub_agent


def main(steps=4000):
    mdp = hub_mdp()
    for s in range(mdp.n_states):
        res = blahut_arimoto(mdp.channel(s))
        print(f"state {s}: capacity {res.capacity:.4f} nats, optimal action mix {np.round(res.policy, 3)}")
    print("exact map", np.round(exact_empowerment_map(mdp), 4))

    agent, env = train_hub_agent(seed=0, steps=steps)
    rho, mean_g, exact = estimator_correlation(agent, env, 4000, np.random.default_rng(0))
    print("mean intrinsic reward per state", np.round(mean_g, 4))
    print(f"Spearman rank correlation with exact empowerment: {rho:.3f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4000)
