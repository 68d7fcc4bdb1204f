//! Complex Hessian of a `K×K`-invariant potential on the open Weyl chamber.
//!
//! For `x ∈ 𝔞₊` the Hessian is block diagonal: `¼ Hess_ℝ ψ(x)` followed by one
//! `2×2` Hermitian block per positive root,
//! `c_α [[coth α(x), i], [−i, coth α(x)]]` with `c_α = ½⟨α, ∇ψ(x)⟩`.
//! Floating point throughout since `coth` is transcendental.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::numeric::{Matrix, Scalar, Vector};
use crate::rootsys::RootSystem;

/// Real scalar for the Hessian computations.
pub trait Real: Scalar + Float {}

impl<F: Scalar + Float> Real for F {}

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Potential data at one chamber point.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalPoint<F> {
    pub x: Vector<F>,
    pub grad: Vector<F>,
    pub hess: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootBlock<F> {
    pub root: Vector<i64>,
    /// `½⟨α, ∇ψ⟩`.
    pub c: F,
    /// `coth α(x)`, always `> 1`.
    pub k: F,
    /// `α(x)` itself, kept so that `k² − 1 = 1/sinh² α(x)` avoids cancellation.
    pub alpha_x: F,
}

impl<F: Real> RootBlock<F> {
    /// Eigenvalues `c(k − 1)` and `c(k + 1)`.
    pub fn eigenvalues(&self) -> [F; 2] {
        [self.c * (self.k - F::one()), self.c * (self.k + F::one())]
    }

    pub fn det(&self) -> F {
        let s = self.alpha_x.sinh();
        self.c * self.c / (s * s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockHessian<F> {
    pub real_block: Matrix<F>,
    pub root_blocks: Vec<RootBlock<F>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    NotPositiveDefinite,
    /// Some pivot or block scale is within tolerance of zero.
    Indeterminate,
}

pub fn assemble<F: Real>(rs: &RootSystem, pt: &EvalPoint<F>) -> Result<BlockHessian<F>> {
    let r = rs.rank();
    if pt.x.len() != r || pt.grad.len() != r || pt.hess.rows() != r || pt.hess.cols() != r {
        return Err(Error::InvalidInput(format!("evaluation data must have dimension {r}")));
    }
    let two = F::one() + F::one();
    let four = two * two;
    for i in 0..r {
        for j in 0..i {
            let (a, b) = (pt.hess[(i, j)], pt.hess[(j, i)]);
            if (a - b).abs() > F::from(1e-12).unwrap() * (F::one() + a.abs().max(b.abs())) {
                return Err(Error::InvalidInput("real Hessian is not symmetric".into()));
            }
        }
    }
    let mut root_blocks = Vec::with_capacity(rs.positive_roots().len());
    for a in rs.positive_roots() {
        let af = a.cast::<F>();
        let t = af.dot(&pt.x);
        if t.is_nan() || t <= F::zero() {
            return Err(Error::InvalidInput(format!("point {} is not in the open chamber: <{a}, x> = {t}", pt.x)));
        }
        root_blocks.push(RootBlock { root: a.clone(), c: af.dot(&pt.grad) / two, k: F::one() / t.tanh(), alpha_x: t });
    }
    let mut real_block = pt.hess.clone();
    for i in 0..r {
        for j in 0..r {
            real_block[(i, j)] = pt.hess[(i, j)] / four;
        }
    }
    Ok(BlockHessian { real_block, root_blocks })
}

impl<F: Real> BlockHessian<F> {
    pub fn dim(&self) -> usize {
        self.real_block.rows() + 2 * self.root_blocks.len()
    }

    /// Cholesky on the real block plus the sign of every `c_α`; both
    /// eigenvalues of a root block share the sign of `c_α` because `k_α > 1`.
    pub fn definiteness(&self, tol: F) -> Definiteness {
        let mut indeterminate = false;
        match cholesky_sign(&self.real_block, tol) {
            Definiteness::NotPositiveDefinite => return Definiteness::NotPositiveDefinite,
            Definiteness::Indeterminate => indeterminate = true,
            Definiteness::PositiveDefinite => {}
        }
        for b in &self.root_blocks {
            if b.c < -tol {
                return Definiteness::NotPositiveDefinite;
            }
            if b.c <= tol {
                indeterminate = true;
            }
        }
        if indeterminate {
            Definiteness::Indeterminate
        } else {
            Definiteness::PositiveDefinite
        }
    }

    pub fn is_positive_definite(&self) -> bool {
        self.definiteness(F::from(DEFAULT_TOLERANCE).unwrap()) == Definiteness::PositiveDefinite
    }

    /// Determinant of the whole block matrix:
    /// `det(¼ Hess_ℝ ψ) · ∏ c_α² (k_α² − 1)`.
    pub fn ma_density(&self) -> F {
        let real = self.real_block.det().expect("square");
        self.root_blocks.iter().fold(real, |acc, b| acc * b.det())
    }

    /// The full Hermitian matrix as `(real part, imaginary part)`, in the
    /// basis order real directions, then `(E_α, E_{−α})` per root.
    pub fn materialize(&self) -> (Matrix<F>, Matrix<F>) {
        let r = self.real_block.rows();
        let n = self.dim();
        let mut re = Matrix::from_vec(n, n, vec![F::zero(); n * n]).expect("square");
        let mut im = re.clone();
        for i in 0..r {
            for j in 0..r {
                re[(i, j)] = self.real_block[(i, j)];
            }
        }
        for (idx, b) in self.root_blocks.iter().enumerate() {
            let o = r + 2 * idx;
            re[(o, o)] = b.c * b.k;
            re[(o + 1, o + 1)] = b.c * b.k;
            im[(o, o + 1)] = b.c;
            im[(o + 1, o)] = -b.c;
        }
        (re, im)
    }
}

fn cholesky_sign<F: Real>(m: &Matrix<F>, tol: F) -> Definiteness {
    let n = m.rows();
    let mut l = vec![F::zero(); n * n];
    for j in 0..n {
        let mut d = m[(j, j)];
        for k in 0..j {
            d = d - l[j * n + k] * l[j * n + k];
        }
        if d < -tol {
            return Definiteness::NotPositiveDefinite;
        }
        if d <= tol {
            return Definiteness::Indeterminate;
        }
        let root = d.sqrt();
        l[j * n + j] = root;
        for i in j + 1..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s = s - l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / root;
        }
    }
    Definiteness::PositiveDefinite
}

/// `ψ(x) = ½ xᵀAx + bᵀx` with symmetric `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticPotential<F> {
    pub a: Matrix<F>,
    pub b: Vector<F>,
}

impl<F: Real> QuadraticPotential<F> {
    pub fn eval_point(&self, x: Vector<F>) -> EvalPoint<F> {
        let grad = &self.a.mul_vec(&x) + &self.b;
        EvalPoint { x, grad, hess: self.a.clone() }
    }
}
