"""Smoke test for the kuiper extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import math

import kuiper


def close(a, b, tol=5e-4):
    return abs(a - b) <= tol


def main():
    p = kuiper.kuiper_pair(0.05, 30)
    assert close(p.critical_value, 1.6758) and close(p.quantile, 0.3060), p
    assert p.test == "vn" and p.n == 30

    q = kuiper.kuiper_pair(0.05, 30, test="vnn")
    assert close(q.critical_value, 2.4430) and close(q.quantile, 0.4460), q

    d = kuiper.kuiper_pair(0.05, 30, method="direct", guess=1.5)
    assert close(d.critical_value, 1.6758)

    lim = kuiper.kuiper_pair(0.10, float("inf"))
    assert close(lim.critical_value, 1.6196) and lim.quantile == 0.0
    assert kuiper.kuiper_pair(0.10, "inf").critical_value == lim.critical_value

    assert close(kuiper.kuiper_utq(0.05, 30), 0.3060)
    assert kuiper.kuiper_utq(0.99995, 17) == 0.0
    assert close(kuiper.kuiper_ltq(0.95, 30), 0.3060)
    assert close(kuiper.kuiper_inv_cdf(0.90, 100), 0.1584)

    assert close(kuiper.survival_one_sample(1.6758, 30), 0.05, 1e-4)
    assert close(kuiper.survival_two_sample(2.4430, 30), 0.05, 1e-4)

    u = [i / 31 for i in range(1, 31)]
    r = kuiper.statistic_one_sample(u)
    assert r.n == 30 and close(r.v, 2 / 31, 1e-12)
    reject, quantile = kuiper.run_test(r, 0.05)
    assert not reject and close(quantile, 0.3060)

    s = kuiper.statistic_two_sample([0.1, 0.2, 0.3], [0.7, 0.8, 0.9])
    assert r.p_value > 0.5 and close(s.v, 1.0, 1e-12)

    for bad in ([], [0.5, 0.2], [0.2, 1.5]):
        try:
            kuiper.statistic_one_sample(bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"accepted {bad}")

    for call in (lambda: kuiper.kuiper_inv_cdf(1.0, 30), lambda: kuiper.kuiper_pair(0.05, 2)):
        try:
            call()
        except RuntimeError:
            pass
        else:
            raise AssertionError("expected RuntimeError")

    frac = kuiper.monte_carlo_exceedance(30, 0.3060, 100_000, 42)
    assert 0.04 <= frac <= 0.06, frac
    assert frac == kuiper.monte_carlo_exceedance(30, 0.3060, 100_000, 42)

    assert math.isinf(lim.n)
    print("python smoke test: PASS")


if __name__ == "__main__":
    main()
