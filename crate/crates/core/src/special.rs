//! Log-space combinatorics for binomial and Poisson weights.

use statrs::function::gamma::ln_gamma;

pub fn ln_factorial(n: u64) -> f64 {
    if n < 2 {
        0.0
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

pub fn ln_binomial(n: u64, k: u64) -> f64 {
    debug_assert!(k <= n);
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// `k · ln(x)` with the convention `0 · ln 0 = 0`.
pub fn ln_pow(x: f64, k: u64) -> f64 {
    if k == 0 {
        0.0
    } else {
        k as f64 * x.ln()
    }
}

/// Binomial pmf over `n ∈ [0, trials]`, given `p` and `q = 1 − p` separately so
/// callers can pass both without cancellation.
pub fn binomial_pmf(trials: u64, p: f64, q: f64) -> Vec<f64> {
    let (lp, lq) = (p.ln(), q.ln());
    (0..=trials)
        .map(|n| {
            let mut ln_w = ln_binomial(trials, n);
            if n > 0 {
                ln_w += n as f64 * lp;
            }
            if n < trials {
                ln_w += (trials - n) as f64 * lq;
            }
            ln_w.exp()
        })
        .collect()
}

pub fn ln_poisson(mean: f64, k: u64) -> f64 {
    if mean == 0.0 {
        return if k == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    -mean + ln_pow(mean, k) - ln_factorial(k)
}

/// `P(K > k_max)` for `K ~ Poisson(mean)`, summed term by term past `k_max`.
pub fn poisson_upper_tail(mean: f64, k_max: u64) -> f64 {
    if mean == 0.0 {
        return 0.0;
    }
    let mut k = k_max + 1;
    let mut term = ln_poisson(mean, k).exp();
    let mut sum = 0.0;
    loop {
        sum += term;
        k += 1;
        term *= mean / k as f64;
        if (k as f64 > mean && term <= sum * 1e-17) || term == 0.0 {
            break;
        }
    }
    sum
}

/// Shannon entropy in nats, skipping zero weights.
pub fn entropy(weights: &[f64]) -> f64 {
    weights
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| -w * w.ln())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn binomial_small_cases() {
        let w = binomial_pmf(6, 0.5, 0.5);
        assert_relative_eq!(w[3], 20.0 / 64.0, max_relative = 1e-13);
        assert_relative_eq!(w.iter().sum::<f64>(), 1.0, max_relative = 1e-13);
        assert_eq!(binomial_pmf(4, 0.0, 1.0), vec![1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(binomial_pmf(3, 1.0, 0.0), vec![0.0, 0.0, 0.0, 1.0]);
        assert_relative_eq!(ln_binomial(100, 50).exp(), 1.0089134454556417e29, max_relative = 1e-12);
    }

    #[test]
    fn poisson_tail_matches_direct_sum() {
        let mean = 7.3;
        let direct: f64 = 1.0 - (0..=12).map(|k| ln_poisson(mean, k).exp()).sum::<f64>();
        assert_relative_eq!(poisson_upper_tail(mean, 12), direct, max_relative = 1e-10);
        assert_eq!(poisson_upper_tail(0.0, 3), 0.0);
        assert!(poisson_upper_tail(625.0, 1200) < 1e-60);
    }

    #[test]
    fn entropy_of_uniform() {
        assert_relative_eq!(entropy(&[0.25; 4]), 4f64.ln(), max_relative = 1e-15);
        assert_eq!(entropy(&[1.0, 0.0]), 0.0);
    }
}
