#![allow(dead_code)]

use kestab::hessian::{assemble, BlockHessian, EvalPoint};
use kestab::rootsys::RootSystemLabel;
use kestab::{Matrix, RootSystem, Vector};
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;

/// Random point of the open chamber with simple-root values in `(0.05, 1.5)`,
/// random gradient and a random symmetric Hessian with eigenvalues bounded
/// away from zero (either sign). Root values stay below 6 so that the
/// materialized f64 matrix, whose blocks have determinant `c²(k² − 1)`, is
/// not dominated by cancellation when `k` approaches 1.
pub fn random_eval_point(rs: &RootSystem, rng: &mut impl Rng) -> EvalPoint<f64> {
    let t1 = rng.gen_range(0.05..1.5);
    let t2 = rng.gen_range(0.05..1.5);
    let x = match rs.label() {
        RootSystemLabel::So4 => vec![(t1 + t2) / 2.0, (t2 - t1) / 2.0],
        _ => vec![t1 + t2, t2],
    };
    let grad = vec![rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
    let theta: f64 = rng.gen_range(0.0..std::f64::consts::PI);
    let (c, s) = (theta.cos(), theta.sin());
    let mut lam = [rng.gen_range(0.2..3.0), rng.gen_range(0.2..3.0)];
    for l in lam.iter_mut() {
        if rng.gen_bool(0.2) {
            *l = -*l;
        }
    }
    let h11 = c * c * lam[0] + s * s * lam[1];
    let h12 = c * s * (lam[0] - lam[1]);
    let h22 = s * s * lam[0] + c * c * lam[1];
    EvalPoint { x: Vector(x), grad: Vector(grad), hess: Matrix::from_vec(2, 2, vec![h11, h12, h12, h22]).unwrap() }
}

pub fn complex_matrix(bh: &BlockHessian<f64>) -> DMatrix<Complex64> {
    let (re, im) = bh.materialize();
    let n = re.rows();
    DMatrix::from_fn(n, n, |i, j| Complex64::new(re[(i, j)], im[(i, j)]))
}

/// Determinant by complex LU and the smallest eigenvalue of the Hermitian
/// matrix (via its real symmetric embedding `[[A, -B], [B, A]]`).
pub fn full_matrix_oracle(bh: &BlockHessian<f64>) -> (f64, f64) {
    let m = complex_matrix(bh);
    let det = m.clone().lu().determinant();
    assert!(det.im.abs() <= 1e-12 * (1.0 + det.re.abs()), "Hermitian determinant must be real: {det}");
    let n = m.nrows();
    let embed = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = m[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let min_eig = SymmetricEigen::new(embed).eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    (det.re, min_eig)
}

pub struct HessianCheck {
    pub points: usize,
    pub worst_relative_det_error: f64,
    pub definiteness_disagreements: usize,
    pub skipped_near_zero: usize,
}

pub fn hessian_cross_check(rs: &RootSystem, points: usize, seed: u64) -> HessianCheck {
    use rand::SeedableRng;
    let mut rng = rand_xoshiro::Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut out =
        HessianCheck { points, worst_relative_det_error: 0.0, definiteness_disagreements: 0, skipped_near_zero: 0 };
    for _ in 0..points {
        let pt = random_eval_point(rs, &mut rng);
        let bh = assemble(rs, &pt).unwrap();
        assert!(bh.root_blocks.iter().all(|b| b.k > 1.0));
        let (det, min_eig) = full_matrix_oracle(&bh);
        let d = bh.ma_density();
        let rel = (d - det).abs() / d.abs().max(f64::MIN_POSITIVE);
        out.worst_relative_det_error = out.worst_relative_det_error.max(rel);
        if min_eig.abs() < 1e-9 {
            out.skipped_near_zero += 1;
        } else if bh.is_positive_definite() != (min_eig > 0.0) {
            out.definiteness_disagreements += 1;
        }
    }
    out
}
