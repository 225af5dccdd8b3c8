//! Exact diagonalisation in the conserved-`λ` sectors.

mod ground;
mod sector;

pub use ground::{find_ground, observables_q, reduced_distributions, GroundState, ScanPolicy};
pub use sector::{analytic_sector_energy, build_sector, solve_sector, SectorHamiltonian, SectorSolution};

pub(crate) use sector::excitations;

#[cfg(test)]
mod tests {
    use nalgebra::DMatrix;

    use super::*;
    use crate::model::{HalfInt, ModelParams};

    /// Full Hamiltonian on `(ν ≤ cutoff) ⊗ (spin j)` from Kronecker products,
    /// spin basis ordered by `m = −j, …, j`.
    fn dense_hamiltonian(params: &ModelParams, cutoff: usize) -> DMatrix<f64> {
        let two_j = params.n_atoms() as usize;
        let j = params.j();
        let n = params.n();
        let dim_s = two_j + 1;
        let dim_f = cutoff + 1;
        let a = DMatrix::from_fn(dim_f, dim_f, |r, c| if c == r + 1 { (c as f64).sqrt() } else { 0.0 });
        let num = DMatrix::from_fn(dim_f, dim_f, |r, c| if r == c { r as f64 } else { 0.0 });
        let m_of = |i: usize| i as f64 - j;
        let jz = DMatrix::from_fn(dim_s, dim_s, |r, c| if r == c { m_of(r) } else { 0.0 });
        // J₊|m⟩ = √((j − m)(j + m + 1)) |m + 1⟩
        let jp = DMatrix::from_fn(dim_s, dim_s, |r, c| {
            if r == c + 1 {
                let m = m_of(c);
                ((j - m) * (j + m + 1.0)).sqrt()
            } else {
                0.0
            }
        });
        let jm = jp.transpose();
        let id_f = DMatrix::<f64>::identity(dim_f, dim_f);
        let id_s = DMatrix::<f64>::identity(dim_s, dim_s);
        let lambda = num.kronecker(&id_s) + id_f.kronecker(&jz);
        let g = params.gamma() / (n * n.sqrt());
        &lambda / n - id_f.kronecker(&jz) * (params.delta() / n)
            + (a.transpose().kronecker(&jm) + a.kronecker(&jp)) * g
    }

    #[test]
    fn sectors_are_blocks_of_the_full_hamiltonian() {
        for n_atoms in 1..=4u32 {
            let params = ModelParams::with_delta(n_atoms, 0.3, -1.3).unwrap();
            let two_j = n_atoms as usize;
            let cutoff = 12;
            let h = dense_hamiltonian(&params, cutoff);
            let index = |nu: usize, m: HalfInt| nu * (two_j + 1) + ((m + params.j_half()).twice() / 2) as usize;
            // sectors whose top photon state lies below the cutoff are exact
            for k in 0..cutoff {
                let lambda = HalfInt::from_int(k as i64) - params.j_half();
                let s = build_sector(&params, lambda).unwrap();
                let rows: Vec<usize> = (s.nu_min..=s.nu_max).map(|nu| index(nu, lambda - nu as i64)).collect();
                for (a, &ra) in rows.iter().enumerate() {
                    for (b, &rb) in rows.iter().enumerate() {
                        let expected = if a == b {
                            s.diag[a]
                        } else if a + 1 == b {
                            s.offdiag[a]
                        } else if b + 1 == a {
                            s.offdiag[b]
                        } else {
                            0.0
                        };
                        assert!((h[(ra, rb)] - expected).abs() < 1e-14, "N={n_atoms} k={k}");
                    }
                    // nothing leaks out of the sector
                    let leak: f64 = (0..h.ncols()).filter(|c| !rows.contains(c)).map(|c| h[(ra, c)].abs()).sum();
                    assert!(leak < 1e-14);
                }
            }
        }
    }
}
