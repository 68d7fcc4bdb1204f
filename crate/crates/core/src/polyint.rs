//! Exact integration of polynomials over polytopes.
//!
//! A polytope is fan-triangulated; on each simplex the integrand is pulled
//! back to the standard simplex and integrated term by term with
//! `∫ ∏ uᵢ^{bᵢ} du = ∏ bᵢ! / (r + Σ bᵢ)!`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::{factorial, is_zero, lex_cmp, Matrix, Scalar, Vector};
use crate::poly::{Exponents, Polynomial};
use crate::polytope::{affine_rank, HalfSpace, Polytope};

#[derive(Clone, Debug, PartialEq)]
pub struct Simplex<T> {
    vertices: Vec<Vector<T>>,
}

impl<T: Scalar> Simplex<T> {
    pub fn new(vertices: Vec<Vector<T>>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::Degenerate("simplex without vertices".into()));
        };
        let r = first.len();
        if vertices.len() != r + 1 || vertices.iter().any(|v| v.len() != r) || affine_rank(&vertices) < r {
            return Err(Error::Degenerate("simplex vertices are not affinely independent".into()));
        }
        Ok(Simplex { vertices })
    }

    pub fn vertices(&self) -> &[Vector<T>] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    fn edges(&self) -> Vec<Vector<T>> {
        self.vertices[1..].iter().map(|v| v - &self.vertices[0]).collect()
    }

    /// `|det(v₁−v₀, …, v_r−v₀)|`, i.e. `r!` times the volume.
    pub fn jacobian(&self) -> T {
        Matrix::from_rows(&self.edges()).det().expect("square").abs()
    }

    pub fn volume(&self) -> T {
        self.jacobian() / factorial(self.dim() as u32)
    }

    /// Coordinates `yⱼ = v₀ⱼ + Σᵢ uᵢ (vᵢ − v₀)ⱼ` as polynomials in `u`.
    fn pullback(&self) -> Vec<Polynomial<T>> {
        let r = self.dim();
        let edges = self.edges();
        (0..r)
            .map(|j| {
                let coeffs: Vector<T> = edges.iter().map(|e| e[j].clone()).collect();
                Polynomial::affine(&coeffs, self.vertices[0][j].clone())
            })
            .collect()
    }
}

/// Integral of a polynomial in `u` over the standard simplex.
fn integrate_standard<T: Scalar>(p: &Polynomial<T>) -> T {
    let r = p.nvars() as u32;
    p.terms().fold(T::zero(), |acc, (e, c)| {
        let num = e.iter().fold(T::one(), |m, &b| m * factorial::<T>(b));
        acc + c.clone() * num / factorial::<T>(r + e.iter().sum::<u32>())
    })
}

pub fn integrate_polynomial_over_simplex<T: Scalar>(s: &Simplex<T>, poly: &Polynomial<T>) -> T {
    integrate_standard(&poly.compose(&s.pullback())) * s.jacobian()
}

pub fn integrate_monomial_over_simplex<T: Scalar>(s: &Simplex<T>, exponents: &Exponents) -> T {
    integrate_polynomial_over_simplex(s, &Polynomial::monomial(exponents.clone(), T::one()))
}

/// Fan triangulation from the lexicographically smallest vertex.
pub fn triangulate<T: Scalar>(p: &Polytope<T>) -> Result<Vec<Simplex<T>>> {
    triangulate_from(p, 0)
}

/// Fan triangulation from `p.vertices()[base]`: cone over every facet not
/// containing the base, each facet triangulated the same way recursively.
pub fn triangulate_from<T: Scalar>(p: &Polytope<T>, base: usize) -> Result<Vec<Simplex<T>>> {
    if base >= p.vertices().len() {
        return Err(Error::InvalidInput(format!("no vertex with index {base}")));
    }
    if affine_rank(p.vertices()) < p.dim() {
        return Err(Error::Degenerate("polytope is not full-dimensional".into()));
    }
    fan(p.vertices(), p.halfspaces(), p.dim(), base).into_iter().map(Simplex::new).collect()
}

fn fan<T: Scalar>(points: &[Vector<T>], halfspaces: &[HalfSpace<T>], k: usize, base: usize) -> Vec<Vec<Vector<T>>> {
    if k == 0 {
        return vec![vec![points[base].clone()]];
    }
    let apex = &points[base];
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for h in halfspaces {
        let face: Vec<usize> = (0..points.len()).filter(|&i| h.is_tight(&points[i])).collect();
        if face.contains(&base) || face.is_empty() || faces.contains(&face) {
            continue;
        }
        let face_points: Vec<Vector<T>> = face.iter().map(|&i| points[i].clone()).collect();
        if affine_rank(&face_points) + 1 == k {
            faces.push(face);
        }
    }
    let mut cells = Vec::new();
    for face in faces {
        let face_points: Vec<Vector<T>> = face.iter().map(|&i| points[i].clone()).collect();
        let sub_base =
            (0..face_points.len()).min_by(|&a, &b| lex_cmp(&face_points[a], &face_points[b])).expect("nonempty face");
        for mut cell in fan(&face_points, halfspaces, k - 1, sub_base) {
            cell.insert(0, apex.clone());
            cells.push(cell);
        }
    }
    cells
}

/// `∫_P poly(y) dy`.
pub fn integrate_polynomial<T: Scalar>(p: &Polytope<T>, poly: &Polynomial<T>) -> Result<T> {
    let cells = triangulate(p)?;
    Ok(sum_in_order(cells.par_iter().map(|s| integrate_polynomial_over_simplex(s, poly)).collect()))
}

fn sum_in_order<T: Scalar>(parts: Vec<T>) -> T {
    parts.into_iter().fold(T::zero(), |a, b| a + b)
}

/// Weighted volume `∫_P π` and first moments `∫_P yⱼ π`.
#[derive(Clone, Debug, PartialEq)]
pub struct Moments<T> {
    pub weighted_volume: T,
    pub first_moments: Vector<T>,
}

impl<T: Scalar> Moments<T> {
    pub fn barycenter(&self) -> Result<Vector<T>> {
        if is_zero(&self.weighted_volume) {
            return Err(Error::Degenerate("weighted volume is zero".into()));
        }
        Ok(self.first_moments.iter().map(|m| m.clone() / self.weighted_volume.clone()).collect())
    }
}

pub fn weighted_moments<T: Scalar>(p: &Polytope<T>, poly: &Polynomial<T>) -> Result<Moments<T>> {
    let cells = triangulate(p)?;
    let r = p.dim();
    let per_cell: Vec<(T, Vec<T>)> = cells
        .par_iter()
        .map(|s| {
            let coords = s.pullback();
            let pulled = poly.compose(&coords);
            let jac = s.jacobian();
            let vol = integrate_standard(&pulled) * jac.clone();
            let firsts = coords.iter().map(|y| integrate_standard(&pulled.mul(y)) * jac.clone()).collect();
            (vol, firsts)
        })
        .collect();
    let mut weighted_volume = T::zero();
    let mut first_moments = Vector::<T>::zeros(r);
    for (v, f) in per_cell {
        weighted_volume = weighted_volume + v;
        first_moments = &first_moments + &Vector(f);
    }
    if is_zero(&weighted_volume) {
        return Err(Error::Degenerate("weighted volume is zero; the weight vanishes on the polytope".into()));
    }
    Ok(Moments { weighted_volume, first_moments })
}

/// `∫_P y π / ∫_P π`.
pub fn barycenter<T: Scalar>(p: &Polytope<T>, poly: &Polynomial<T>) -> Result<Vector<T>> {
    weighted_moments(p, poly)?.barycenter()
}
