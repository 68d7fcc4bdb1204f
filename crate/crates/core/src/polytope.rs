//! Convex polytopes in both half-space and vertex form.
//!
//! Vertex enumeration is brute force over `r`-subsets of half-spaces, which is
//! plenty for the low ranks handled here.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::numeric::{
    approx_eq, combinations, is_zero, lex_cmp, orthogonal_complement, primitive_integer_direction, sign, Matrix,
    Scalar, Vector,
};
use crate::rootsys::{Cone, WeylGroup};

/// `⟨normal, y⟩ ≤ offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpace<T> {
    pub normal: Vector<T>,
    pub offset: T,
}

impl<T: Scalar> HalfSpace<T> {
    pub fn new(normal: Vector<T>, offset: T) -> Result<Self> {
        if normal.iter().all(is_zero) {
            return Err(Error::InvalidInput("half-space with zero normal".into()));
        }
        Ok(HalfSpace { normal, offset })
    }

    /// `offset − ⟨normal, y⟩`; nonnegative inside.
    pub fn slack(&self, y: &Vector<T>) -> T {
        self.offset.clone() - self.normal.dot(y)
    }

    pub fn contains(&self, y: &Vector<T>) -> bool {
        sign(&self.slack(y)) != Ordering::Less
    }

    pub fn is_tight(&self, y: &Vector<T>) -> bool {
        is_zero(&self.slack(y))
    }

    /// Rescales exact half-spaces so the normal is a primitive integer vector.
    fn normalized(self) -> Self {
        if !T::EXACT {
            return self;
        }
        let rational: Option<Vec<BigRational>> = self.normal.iter().map(Scalar::to_rational).collect();
        let Some(rational) = rational else { return self };
        let Ok(prim) = primitive_integer_direction(&rational) else { return self };
        let k = rational.iter().position(|a| !num_traits::Zero::is_zero(a)).expect("nonzero normal");
        let factor = BigRational::from_integer(prim[k].clone()) / &rational[k];
        let factor = T::from_rational(&factor);
        HalfSpace { normal: self.normal.scale(&factor), offset: self.offset * factor }
    }

    /// Primitive integer normal, when the normal is rational.
    pub fn lattice_normal(&self) -> Option<Vec<BigInt>> {
        let rational: Option<Vec<BigRational>> = self.normal.iter().map(Scalar::to_rational).collect();
        primitive_integer_direction(&rational?).ok()
    }
}

impl<T: Scalar> fmt::Display for HalfSpace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} . y <= {}", self.normal, self.offset)
    }
}

/// Bounded full-dimensional convex polytope.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope<T> {
    dim: usize,
    halfspaces: Vec<HalfSpace<T>>,
    vertices: Vec<Vector<T>>,
}

impl<T: Scalar> Polytope<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Irredundant facet inequalities.
    pub fn halfspaces(&self) -> &[HalfSpace<T>] {
        &self.halfspaces
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vector<T>] {
        &self.vertices
    }

    pub fn contains(&self, y: &Vector<T>) -> bool {
        self.halfspaces.iter().all(|h| h.contains(y))
    }

    pub fn tight_halfspaces(&self, v: &Vector<T>) -> Vec<&HalfSpace<T>> {
        self.halfspaces.iter().filter(|h| h.is_tight(v)).collect()
    }

    /// Exact vertex enumeration from half-spaces.
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<HalfSpace<T>>) -> Result<Self> {
        enumerate_vertices(dim, halfspaces)
    }

    /// Convex hull of a finite point set.
    pub fn from_vertices(dim: usize, points: &[Vector<T>]) -> Result<Self> {
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::InvalidInput("point dimension mismatch".into()));
        }
        let points = dedup_points(points.to_vec());
        if affine_rank(&points) < dim {
            return Err(Error::Degenerate("points do not span a full-dimensional hull".into()));
        }
        let mut halfspaces: Vec<HalfSpace<T>> = Vec::new();
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for subset in combinations(points.len(), dim) {
            let base = &points[subset[0]];
            let diffs: Vec<Vector<T>> = subset[1..].iter().map(|&i| &points[i] - base).collect();
            let normal = orthogonal_complement(&diffs);
            if normal.iter().all(is_zero) {
                continue;
            }
            let offset = normal.dot(base);
            let sides: Vec<Ordering> = points.iter().map(|p| sign(&(normal.dot(p) - offset.clone()))).collect();
            let h = if sides.iter().all(|s| *s != Ordering::Greater) {
                HalfSpace { normal, offset }
            } else if sides.iter().all(|s| *s != Ordering::Less) {
                HalfSpace { normal: -&normal, offset: -offset }
            } else {
                continue;
            };
            let tight: Vec<usize> =
                sides.iter().enumerate().filter(|(_, s)| **s == Ordering::Equal).map(|(i, _)| i).collect();
            if seen.contains(&tight) {
                continue;
            }
            seen.push(tight);
            halfspaces.push(h);
        }
        enumerate_vertices(dim, halfspaces)
    }

    /// Checks vertex feasibility, vertex tightness, facet support and the
    /// hull round-trip.
    pub fn validate(&self) -> Result<()> {
        for v in &self.vertices {
            if !self.contains(v) {
                return Err(Error::Degenerate(format!("vertex {v} violates a half-space")));
            }
            let tight: Vec<Vector<T>> = self.tight_halfspaces(v).iter().map(|h| h.normal.clone()).collect();
            if tight.is_empty() || Matrix::from_rows(&tight).rank() < self.dim {
                return Err(Error::Degenerate(format!("vertex {v} is not tight on {} independent facets", self.dim)));
            }
        }
        for h in &self.halfspaces {
            let tight: Vec<Vector<T>> = self.vertices.iter().filter(|v| h.is_tight(v)).cloned().collect();
            if tight.is_empty() || affine_rank(&tight) + 1 < self.dim {
                return Err(Error::Degenerate(format!("half-space {h} does not support a facet")));
            }
        }
        let hull = Polytope::from_vertices(self.dim, &self.vertices)?;
        if !same_points(&hull.vertices, &self.vertices) {
            return Err(Error::Degenerate("vertex hull does not reproduce the vertex set".into()));
        }
        Ok(())
    }

    /// `t·P` for `t > 0`.
    pub fn dilate(&self, t: &T) -> Result<Self> {
        if sign(t) != Ordering::Greater {
            return Err(Error::InvalidInput(format!("dilation factor must be positive, got {t}")));
        }
        Ok(Polytope {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| HalfSpace { normal: h.normal.clone(), offset: h.offset.clone() * t.clone() })
                .collect(),
            vertices: self.vertices.iter().map(|v| v.scale(t)).collect(),
        })
    }

    pub fn translate(&self, shift: &Vector<T>) -> Self {
        Polytope {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| HalfSpace { normal: h.normal.clone(), offset: h.offset.clone() + h.normal.dot(shift) })
                .collect(),
            vertices: self.vertices.iter().map(|v| v + shift).collect(),
        }
    }

    /// Image under an invertible linear map.
    pub fn transform(&self, m: &Matrix<T>) -> Result<Self> {
        let image: Vec<Vector<T>> = self.vertices.iter().map(|v| m.mul_vec(v)).collect();
        Polytope::from_vertices(self.dim, &image)
    }

    /// `P ∩ chamber`.
    pub fn positive_part(&self, chamber: &Cone) -> Result<Self> {
        positive_part(self, chamber)
    }

    pub fn same_vertices(&self, other: &Self) -> bool {
        same_points(&self.vertices, &other.vertices)
    }

    /// Vertices in counterclockwise boundary order (2D only).
    pub fn boundary_cycle(&self) -> Vec<Vector<T>> {
        if self.dim != 2 {
            return self.vertices.clone();
        }
        let n = T::from_usize(self.vertices.len()).expect("count fits");
        let mut c = Vector::<T>::zeros(2);
        for v in &self.vertices {
            c = &c + v;
        }
        let c = c.scale(&(T::one() / n));
        let mut out = self.vertices.clone();
        // sort by angle around the centroid without trigonometry
        let half = |d: &Vector<T>| if d[1].is_positive() || (is_zero(&d[1]) && d[0].is_positive()) { 0 } else { 1 };
        out.sort_by(|a, b| {
            let da = a - &c;
            let db = b - &c;
            half(&da).cmp(&half(&db)).then_with(|| {
                let cross = da[0].clone() * db[1].clone() - da[1].clone() * db[0].clone();
                sign(&cross).reverse()
            })
        });
        out
    }
}

fn dedup_points<T: Scalar>(points: Vec<Vector<T>>) -> Vec<Vector<T>> {
    let mut out: Vec<Vector<T>> = Vec::new();
    for p in points {
        if !out.iter().any(|q| points_eq(q, &p)) {
            out.push(p);
        }
    }
    out
}

fn points_eq<T: Scalar>(a: &Vector<T>, b: &Vector<T>) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| approx_eq(x, y))
}

fn same_points<T: Scalar>(a: &[Vector<T>], b: &[Vector<T>]) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.iter().any(|q| points_eq(p, q)))
}

/// Dimension of the affine hull of a point set (`0` for a single point).
pub fn affine_rank<T: Scalar>(points: &[Vector<T>]) -> usize {
    match points.split_first() {
        Some((base, rest)) if !rest.is_empty() => {
            let diffs: Vec<Vector<T>> = rest.iter().map(|p| p - base).collect();
            Matrix::from_rows(&diffs).rank()
        }
        _ => 0,
    }
}

/// Vertices of `{y : ⟨n_i, y⟩ ≤ c_i}` plus the irredundant half-spaces.
pub fn enumerate_vertices<T: Scalar>(dim: usize, halfspaces: Vec<HalfSpace<T>>) -> Result<Polytope<T>> {
    if dim == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    for h in &halfspaces {
        if h.normal.len() != dim {
            return Err(Error::InvalidInput(format!(
                "half-space normal has length {}, expected {dim}",
                h.normal.len()
            )));
        }
        if h.normal.iter().all(is_zero) {
            return Err(Error::InvalidInput("half-space with zero normal".into()));
        }
    }
    check_bounded(dim, &halfspaces)?;

    let mut vertices: Vec<Vector<T>> = Vec::new();
    for subset in combinations(halfspaces.len(), dim) {
        let rows: Vec<Vector<T>> = subset.iter().map(|&i| halfspaces[i].normal.clone()).collect();
        let rhs: Vector<T> = subset.iter().map(|&i| halfspaces[i].offset.clone()).collect();
        let Ok(v) = Matrix::from_rows(&rows).solve(&rhs) else { continue };
        if halfspaces.iter().all(|h| h.contains(&v)) && !vertices.iter().any(|w| points_eq(w, &v)) {
            vertices.push(v);
        }
    }
    if vertices.is_empty() {
        return Err(Error::Empty);
    }
    if affine_rank(&vertices) < dim {
        return Err(Error::Degenerate("region is not full-dimensional".into()));
    }
    vertices.sort_by(lex_cmp);

    let mut facets: Vec<(Vec<usize>, HalfSpace<T>)> = Vec::new();
    for h in halfspaces {
        let tight: Vec<usize> = (0..vertices.len()).filter(|&i| h.is_tight(&vertices[i])).collect();
        let pts: Vec<Vector<T>> = tight.iter().map(|&i| vertices[i].clone()).collect();
        if pts.is_empty() || affine_rank(&pts) + 1 < dim {
            continue;
        }
        if facets.iter().any(|(t, _)| *t == tight) {
            continue;
        }
        facets.push((tight, h.normalized()));
    }
    Ok(Polytope { dim, halfspaces: facets.into_iter().map(|(_, h)| h).collect(), vertices })
}

/// The recession cone `{d : ⟨n_i, d⟩ ≤ 0}` must be trivial. When the normals
/// span, any nonzero recession direction has an extreme ray orthogonal to
/// `dim − 1` independent normals.
fn check_bounded<T: Scalar>(dim: usize, halfspaces: &[HalfSpace<T>]) -> Result<()> {
    let normals: Vec<Vector<T>> = halfspaces.iter().map(|h| h.normal.clone()).collect();
    if normals.is_empty() || Matrix::from_rows(&normals).rank() < dim {
        return Err(Error::Unbounded);
    }
    for subset in combinations(normals.len(), dim - 1) {
        let span: Vec<Vector<T>> = subset.iter().map(|&i| normals[i].clone()).collect();
        let d = orthogonal_complement(&span);
        if d.iter().all(is_zero) {
            continue;
        }
        for cand in [d.clone(), -&d] {
            if normals.iter().all(|n| sign(&n.dot(&cand)) != Ordering::Greater) {
                return Err(Error::Unbounded);
            }
        }
    }
    Ok(())
}

/// Intersection with a closed cone given by facet normals `⟨n, y⟩ ≥ 0`.
pub fn positive_part<T: Scalar>(p: &Polytope<T>, chamber: &Cone) -> Result<Polytope<T>> {
    if chamber.rank() != p.dim {
        return Err(Error::InvalidInput("chamber and polytope dimensions differ".into()));
    }
    let mut hs = p.halfspaces.clone();
    for n in chamber.facet_normals() {
        hs.push(HalfSpace { normal: -&n.cast::<T>(), offset: T::zero() });
    }
    match enumerate_vertices(p.dim, hs) {
        Err(Error::Empty) => Err(Error::Empty),
        Err(Error::Degenerate(_)) => Err(Error::Degenerate("positive part is not full-dimensional".into())),
        other => other,
    }
}

/// Convex hull of the Weyl orbit of the vertices.
pub fn weyl_orbit_polytope<T: Scalar>(p_plus: &Polytope<T>, w: &WeylGroup<T>) -> Result<Polytope<T>> {
    let points: Vec<Vector<T>> =
        w.elements().iter().flat_map(|m| p_plus.vertices.iter().map(move |v| m.mul_vec(v))).collect();
    Polytope::from_vertices(p_plus.dim, &points)
}

#[derive(Clone, Debug, PartialEq)]
pub enum DelzantFailure {
    /// Number of tight facets differs from the dimension.
    NonSimple { tight_facets: usize },
    /// Tight primitive normals span a sublattice of this index.
    NotUnimodular { det: BigInt },
    /// Some tight normal is not rational.
    Irrational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DelzantReport<T> {
    pub offending: Vec<(Vector<T>, DelzantFailure)>,
}

impl<T> DelzantReport<T> {
    pub fn is_smooth(&self) -> bool {
        self.offending.is_empty()
    }
}

/// At each vertex the primitive normals of the tight facets must form a
/// lattice basis.
pub fn delzant_check<T: Scalar>(p: &Polytope<T>) -> DelzantReport<T> {
    let mut offending = Vec::new();
    for v in &p.vertices {
        let tight = p.tight_halfspaces(v);
        if tight.len() != p.dim {
            offending.push((v.clone(), DelzantFailure::NonSimple { tight_facets: tight.len() }));
            continue;
        }
        let normals: Option<Vec<Vec<BigInt>>> = tight.iter().map(|h| h.lattice_normal()).collect();
        let Some(normals) = normals else {
            offending.push((v.clone(), DelzantFailure::Irrational));
            continue;
        };
        let rows: Vec<Vector<BigRational>> =
            normals.into_iter().map(|n| n.into_iter().map(BigRational::from_integer).collect()).collect();
        let det = Matrix::from_rows(&rows).det().expect("square").to_integer();
        if !det.abs().is_one() {
            offending.push((v.clone(), DelzantFailure::NotUnimodular { det }));
        }
    }
    DelzantReport { offending }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn pt(v: &[(i64, i64)]) -> Vector<Q> {
        v.iter().map(|&(n, d)| q(n, d)).collect()
    }

    fn ipt(v: &[i64]) -> Vector<Q> {
        v.iter().map(|&n| q(n, 1)).collect()
    }

    fn hs(n: &[i64], c: i64) -> HalfSpace<Q> {
        HalfSpace::new(ipt(n), q(c, 1)).unwrap()
    }

    fn sorted(mut v: Vec<Vector<Q>>) -> Vec<Vector<Q>> {
        v.sort();
        v
    }

    fn unit_square() -> Polytope<Q> {
        enumerate_vertices(2, vec![hs(&[1, 0], 1), hs(&[-1, 0], 0), hs(&[0, 1], 1), hs(&[0, -1], 0)]).unwrap()
    }

    fn square(r: i64) -> Polytope<Q> {
        enumerate_vertices(2, vec![hs(&[1, 0], r), hs(&[-1, 0], r), hs(&[0, 1], r), hs(&[0, -1], r)]).unwrap()
    }

    fn so4_case1() -> Polytope<Q> {
        // x − y ≥ 0, x + y ≥ 0, x ≤ 3
        enumerate_vertices(2, vec![hs(&[-1, 1], 0), hs(&[-1, -1], 0), hs(&[1, 0], 3)]).unwrap()
    }

    fn so4_case2() -> Polytope<Q> {
        enumerate_vertices(2, vec![hs(&[-1, 1], 0), hs(&[-1, -1], 0), hs(&[1, 0], 3), hs(&[1, -1], 3)]).unwrap()
    }

    #[test]
    fn unit_square_vertices() {
        let p = unit_square();
        assert_eq!(p.vertices(), &[ipt(&[0, 0]), ipt(&[0, 1]), ipt(&[1, 0]), ipt(&[1, 1])]);
        p.validate().unwrap();
    }

    #[test]
    fn catalog_triangles() {
        let p = so4_case1();
        assert_eq!(sorted(p.vertices().to_vec()), sorted(vec![ipt(&[0, 0]), ipt(&[3, 3]), ipt(&[3, -3])]));
        let sp = enumerate_vertices(2, vec![hs(&[0, -1], 0), hs(&[-1, 1], 0), hs(&[1, 0], 5), hs(&[1, 1], 7)]).unwrap();
        assert_eq!(
            sorted(sp.vertices().to_vec()),
            sorted(vec![ipt(&[0, 0]), ipt(&[5, 0]), ipt(&[5, 2]), pt(&[(7, 2), (7, 2)])])
        );
        sp.validate().unwrap();
    }

    #[test]
    fn redundant_halfspaces_are_dropped() {
        let p = enumerate_vertices(
            2,
            vec![hs(&[1, 0], 1), hs(&[-1, 0], 0), hs(&[0, 1], 1), hs(&[0, -1], 0), hs(&[1, 1], 5), hs(&[2, 0], 2)],
        )
        .unwrap();
        assert_eq!(p.halfspaces().len(), 4);
    }

    #[test]
    fn exact_normals_are_primitive() {
        let p = enumerate_vertices(
            2,
            vec![
                HalfSpace::new(pt(&[(1, 2), (0, 1)]), q(1, 2)).unwrap(),
                hs(&[-2, 0], 0),
                hs(&[0, 4], 4),
                hs(&[0, -1], 0),
            ],
        )
        .unwrap();
        assert_eq!(p.halfspaces()[0], hs(&[1, 0], 1));
        assert_eq!(p.halfspaces()[1], hs(&[-1, 0], 0));
        assert_eq!(p.halfspaces()[2], hs(&[0, 1], 1));
    }

    #[test]
    fn unbounded_and_empty_regions() {
        assert_eq!(enumerate_vertices(2, vec![hs(&[1, 0], 1), hs(&[0, 1], 1)]).unwrap_err(), Error::Unbounded);
        assert_eq!(
            enumerate_vertices(2, vec![hs(&[1, 0], 1), hs(&[-1, 0], 1), hs(&[0, 1], 1)]).unwrap_err(),
            Error::Unbounded
        );
        assert_eq!(
            enumerate_vertices(2, vec![hs(&[1, 0], 0), hs(&[-1, 0], -1), hs(&[0, 1], 1), hs(&[0, -1], 0)]).unwrap_err(),
            Error::Empty
        );
        assert!(matches!(
            enumerate_vertices(2, vec![hs(&[1, 0], 0), hs(&[-1, 0], 0), hs(&[0, 1], 1), hs(&[0, -1], 0)]),
            Err(Error::Degenerate(_))
        ));
        assert!(HalfSpace::new(ipt(&[0, 0]), q(1, 1)).is_err());
    }

    #[test]
    fn positive_parts() {
        let chamber = RootSystem::so4().weyl_chamber();
        let p = square(3).positive_part(&chamber).unwrap();
        assert_eq!(sorted(p.vertices().to_vec()), sorted(vec![ipt(&[0, 0]), ipt(&[3, 3]), ipt(&[3, -3])]));
        let again = p.positive_part(&chamber).unwrap();
        assert_eq!(again, p);

        let hex = weyl_orbit_polytope(&so4_case2(), &RootSystem::so4().weyl_group().unwrap()).unwrap();
        let quad = hex.positive_part(&chamber).unwrap();
        assert_eq!(
            sorted(quad.vertices().to_vec()),
            sorted(vec![ipt(&[0, 0]), ipt(&[3, 3]), ipt(&[3, 0]), pt(&[(3, 2), (-3, 2)])])
        );

        let far =
            enumerate_vertices(2, vec![hs(&[1, 0], -1), hs(&[-1, 0], 2), hs(&[0, 1], 1), hs(&[0, -1], 1)]).unwrap();
        assert_eq!(far.positive_part(&chamber).unwrap_err(), Error::Empty);
    }

    #[test]
    fn weyl_orbits() {
        let w = RootSystem::so4().weyl_group().unwrap();
        let sq = weyl_orbit_polytope(&so4_case1(), &w).unwrap();
        assert!(sq.same_vertices(&square(3)));

        let hex = weyl_orbit_polytope(&so4_case2(), &w).unwrap();
        let expected = vec![ipt(&[3, 3]), ipt(&[3, 0]), ipt(&[0, -3]), ipt(&[-3, -3]), ipt(&[-3, 0]), ipt(&[0, 3])];
        assert_eq!(sorted(hex.vertices().to_vec()), sorted(expected));
        hex.validate().unwrap();

        let same = weyl_orbit_polytope(&so4_case1(), &WeylGroup::trivial(2)).unwrap();
        assert!(same.same_vertices(&so4_case1()));
    }

    #[test]
    fn delzant() {
        assert!(delzant_check(&square(3)).is_smooth());
        let hex = weyl_orbit_polytope(&so4_case2(), &RootSystem::so4().weyl_group().unwrap()).unwrap();
        assert!(delzant_check(&hex).is_smooth());

        // normals (1,0), (0,1), (−1,−2)
        let tri = enumerate_vertices(2, vec![hs(&[1, 0], 2), hs(&[0, 1], 2), hs(&[-1, -2], 2)]).unwrap();
        let report = delzant_check(&tri);
        assert!(!report.is_smooth());
        assert_eq!(report.offending.len(), 1);
        let (v, failure) = &report.offending[0];
        assert_eq!(v, &ipt(&[2, -2]));
        assert_eq!(failure, &DelzantFailure::NotUnimodular { det: BigInt::from(-2) });
    }

    #[test]
    fn dilation() {
        let d = unit_square().dilate(&q(2, 1)).unwrap();
        assert_eq!(d.vertices(), &[ipt(&[0, 0]), ipt(&[0, 2]), ipt(&[2, 0]), ipt(&[2, 2])]);
        d.validate().unwrap();
        let t = so4_case1().dilate(&q(2, 1)).unwrap();
        assert_eq!(sorted(t.vertices().to_vec()), sorted(vec![ipt(&[0, 0]), ipt(&[6, 6]), ipt(&[6, -6])]));
        assert_eq!(so4_case1().dilate(&q(1, 1)).unwrap(), so4_case1());
        assert!(so4_case1().dilate(&q(0, 1)).is_err());
        assert!(so4_case1().dilate(&q(-1, 2)).is_err());
    }

    #[test]
    fn boundary_order() {
        let cyc = so4_case2().boundary_cycle();
        assert_eq!(cyc.len(), 4);
        for i in 0..4 {
            let a = &cyc[i];
            let b = &cyc[(i + 1) % 4];
            let c = &cyc[(i + 2) % 4];
            let ab = b - a;
            let bc = c - b;
            assert!(ab[0].clone() * bc[1].clone() - ab[1].clone() * bc[0].clone() > q(0, 1));
        }
    }

    #[test]
    fn float_enumeration() {
        let h = |n: [f64; 2], c: f64| HalfSpace::new(Vector(n.to_vec()), c).unwrap();
        let p = enumerate_vertices(2, vec![h([-1.0, 1.0], 0.0), h([-1.0, -1.0], 0.0), h([1.0, 0.0], 3.0)]).unwrap();
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn three_dimensional_cube() {
        let mut hsv = Vec::new();
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 1;
            hsv.push(hs(&e, 1));
            e[i] = -1;
            hsv.push(hs(&e, 1));
        }
        let cube = enumerate_vertices(3, hsv).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        assert_eq!(cube.halfspaces().len(), 6);
        cube.validate().unwrap();
        assert!(delzant_check(&cube).is_smooth());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn polygon() -> impl Strategy<Value = Polytope<Q>> {
            prop::collection::vec((-6i64..=6, -6i64..=6), 3..8).prop_filter_map("degenerate", |pts| {
                let pts: Vec<Vector<Q>> = pts.into_iter().map(|(a, b)| ipt(&[a, b])).collect();
                Polytope::from_vertices(2, &pts).ok()
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn halfspace_round_trip(p in polygon()) {
                p.validate().unwrap();
                let again = enumerate_vertices(2, p.halfspaces().to_vec()).unwrap();
                prop_assert_eq!(again.vertices(), p.vertices());
            }

            #[test]
            fn orbit_is_weyl_invariant(p in polygon()) {
                for rs in [RootSystem::so4(), RootSystem::sp4()] {
                    let w = rs.weyl_group().unwrap();
                    let Ok(plus) = p.positive_part(&rs.weyl_chamber()) else { continue };
                    let orbit = weyl_orbit_polytope(&plus, &w).unwrap();
                    let smooth = delzant_check(&orbit).is_smooth();
                    for g in w.elements() {
                        let image = orbit.transform(g).unwrap();
                        prop_assert!(image.same_vertices(&orbit));
                        prop_assert_eq!(delzant_check(&image).is_smooth(), smooth);
                    }
                }
            }
        }
    }
}
