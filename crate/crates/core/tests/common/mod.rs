#![allow(dead_code)]

use nalgebra::{DMatrix, Matrix3};
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use tavis_core::semiclassical::energy_at;
use tavis_core::{HalfInt, ModelParams};

/// Draws `count` values from `strategy` with a fixed seed.
pub fn sample<S: Strategy>(strategy: S, count: usize) -> Vec<S::Value> {
    let mut runner = TestRunner::deterministic();
    (0..count).map(|_| strategy.new_tree(&mut runner).expect("strategy").current()).collect()
}

/// Full Hamiltonian on `(ν ≤ cutoff) ⊗ (spin j)` built from Kronecker
/// products of `a`, `a†`, `J_z`, `J_±`; spin basis ordered by `m = −j, …, j`.
pub fn dense_hamiltonian(params: &ModelParams, cutoff: usize) -> DMatrix<f64> {
    let dim_s = params.n_atoms() as usize + 1;
    let dim_f = cutoff + 1;
    let j = params.j();
    let n = params.n();
    let a = DMatrix::from_fn(dim_f, dim_f, |r, c| if c == r + 1 { (c as f64).sqrt() } else { 0.0 });
    let num = DMatrix::from_fn(dim_f, dim_f, |r, c| if r == c { r as f64 } else { 0.0 });
    let m_of = |i: usize| i as f64 - j;
    let jz = DMatrix::from_fn(dim_s, dim_s, |r, c| if r == c { m_of(r) } else { 0.0 });
    let jp = DMatrix::from_fn(dim_s, dim_s, |r, c| {
        let m = m_of(c);
        if r == c + 1 { ((j - m) * (j + m + 1.0)).sqrt() } else { 0.0 }
    });
    let jm = jp.transpose();
    let id_f = DMatrix::<f64>::identity(dim_f, dim_f);
    let id_s = DMatrix::<f64>::identity(dim_s, dim_s);
    let g = params.gamma() / (n * n.sqrt());
    (num.kronecker(&id_s) + id_f.kronecker(&jz)) / n - id_f.kronecker(&jz) * (params.delta() / n)
        + (a.transpose().kronecker(&jm) + a.kronecker(&jp)) * g
}

/// Row of `|ν⟩ ⊗ |j, m⟩` in [`dense_hamiltonian`].
pub fn dense_index(params: &ModelParams, nu: usize, m: HalfInt) -> usize {
    nu * (params.n_atoms() as usize + 1) + ((m + params.j_half()).twice() / 2) as usize
}

/// Central-difference gradient of `E/N` in `(q, p, θ, φ)`.
pub fn numerical_gradient(params: &ModelParams, x: [f64; 4], h: f64) -> [f64; 4] {
    let f = |x: [f64; 4]| energy_at(params, x[0], x[1], x[2], x[3]).0;
    std::array::from_fn(|i| {
        let (mut up, mut dn) = (x, x);
        up[i] += h;
        dn[i] -= h;
        (f(up) - f(dn)) / (2.0 * h)
    })
}

/// Ascending eigenvalues of the Hessian of `E/N` in `(q, p, θ)` at `φ = 0`,
/// from central differences at steps `h` and `h/2` combined by Richardson
/// extrapolation.
pub fn numerical_hessian_eigs(params: &ModelParams, x: [f64; 3], h: f64) -> [f64; 3] {
    let m = (hessian(params, x, h / 2.0) * 4.0 - hessian(params, x, h)) / 3.0;
    let mut e: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    e.sort_by(f64::total_cmp);
    [e[0], e[1], e[2]]
}

fn hessian(params: &ModelParams, x: [f64; 3], h: f64) -> Matrix3<f64> {
    let f = |x: [f64; 3]| energy_at(params, x[0], x[1], x[2], 0.0).0;
    let shifted = |steps: &[(usize, f64)]| {
        let mut y = x;
        for &(i, s) in steps {
            y[i] += s * h;
        }
        f(y)
    };
    Matrix3::from_fn(|a, b| {
        if a == b {
            (shifted(&[(a, 1.0)]) - 2.0 * f(x) + shifted(&[(a, -1.0)])) / (h * h)
        } else {
            (shifted(&[(a, 1.0), (b, 1.0)]) - shifted(&[(a, 1.0), (b, -1.0)]) - shifted(&[(a, -1.0), (b, 1.0)])
                + shifted(&[(a, -1.0), (b, -1.0)]))
                / (4.0 * h * h)
        }
    })
}
