import math

import pytest

import scsc


def test_incomparability_greedy_and_ratios():
  f, cost, tau = scsc.make_incomparability_instance(10, 0.5)
  solution, trace = scsc.greedy(f, cost, tau)
  assert solution == [0, 9]
  assert trace.status == "covered"
  stats = scsc.trace_stats_exact(f, trace)
  assert stats["alpha"] == 8.5
  assert stats["beta"] == pytest.approx(0.5, abs=1e-12)
  r1 = scsc.ratio_thm1(0.0, 1.0, 1.0, 1.0, stats["mu"], stats["alpha"], stats["beta"])
  assert r1.valid
  assert r1.value == pytest.approx(math.log(17.0) + 2.0, abs=1e-12)
  best = scsc.best_gamma(0.0, 1.0, 1.0, 1.0, 1.0, 8.5, 10)
  assert best.gamma == pytest.approx(0.10)


def test_sketch_oracle_matches_exact_when_k_is_large():
  g = scsc.erdos_renyi(30, 0.1, seed=2).with_weighted_cascade(0.5)
  r = scsc.sample_realizations(g, 20, seed=3)
  f = scsc.exact_oracle(g, r)
  F = scsc.sketch_oracle(g, r, rank_seed=4, k=30 * 20 + 1)
  for s in ([0], [1, 2, 3], list(range(30))):
    assert F(s) == f(s)


def test_python_function_oracle_and_optimal_cover():
  weights = [3.0, 2.0, 2.0, 1.0]
  f = scsc.function_oracle(4, lambda s: sum(weights[v] for v in s), submodular=True)
  cost = scsc.modular_cost([1.0, 1.0, 1.0, 1.0])
  solution, trace = scsc.greedy(f, cost, 5.0, lazy=True)
  assert solution == [0, 1]
  assert scsc.optimal_cover(f, cost, 5.0) == (True, [0, 1], 2.0)
  assert scsc.check_submodular(f) == []
  assert trace.to_csv().startswith("iter,element_original_id,gain,cost,F_before,F_after\n")


def test_noisy_oracle_bounds():
  f = scsc.coverage_oracle([[0], [1], [0, 2]], [1.0, 2.0, 4.0])
  F = scsc.noisy_oracle(f, 0.25, seed=1)
  for s in ([], [0], [1, 2], [0, 1, 2]):
    assert abs(F(s) - f(s)) <= 0.25


def test_experiment_is_deterministic():
  config = {"dataset": "er:40:0.05", "N": 30, "eps_rel": "0.2", "auto_tau_steps": 2}
  a = scsc.run_experiment(config)
  assert a == scsc.run_experiment(config)
  assert a.startswith("dataset,n,eps_rel")
  assert a.count("\r\n") == 1 + 4


def test_bad_config_key():
  with pytest.raises(ValueError):
    scsc.run_experiment({"dataset": "er:10:0.1", "bogus": 1})
