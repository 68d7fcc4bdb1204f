//! Positive roots, Weyl chamber, the cone spanned by the positive roots, the
//! Weyl group and the weight polynomial `π(y) = ∏ ⟨α, y⟩²`.
//!
//! Roots are lattice vectors and are stored as `i64`. Pairings use the plain
//! dot product in the chosen coordinates; rescaling one root changes `π` by a
//! constant factor, which cancels in every barycenter.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numeric::{combinations, orthogonal_complement, primitive_i64, Matrix, Scalar, Vector};
use crate::poly::Polynomial;

/// `π(y)`, stored expanded.
pub type WeightPolynomial<T> = Polynomial<T>;

/// Which root system a [`RootSystem`] was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSystemLabel {
    So4,
    Sp4,
    Custom,
}

impl RootSystemLabel {
    /// Built-in systems are semisimple groups with finite center.
    pub fn is_builtin(&self) -> bool {
        !matches!(self, RootSystemLabel::Custom)
    }
}

impl fmt::Display for RootSystemLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootSystemLabel::So4 => "SO4",
            RootSystemLabel::Sp4 => "Sp4",
            RootSystemLabel::Custom => "custom",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    positive_roots: Vec<Vector<i64>>,
    label: RootSystemLabel,
}

impl RootSystem {
    /// `SO₄(ℂ)`, type `A₁×A₁`.
    pub fn so4() -> Self {
        RootSystem {
            rank: 2,
            positive_roots: vec![Vector(vec![1, -1]), Vector(vec![1, 1])],
            label: RootSystemLabel::So4,
        }
    }

    /// `Sp₄(ℂ)`, type `C₂`.
    pub fn sp4() -> Self {
        RootSystem {
            rank: 2,
            positive_roots: vec![Vector(vec![1, -1]), Vector(vec![1, 1]), Vector(vec![2, 0]), Vector(vec![0, 2])],
            label: RootSystemLabel::Sp4,
        }
    }

    pub fn custom(rank: usize, positive_roots: Vec<Vector<i64>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be positive".into()));
        }
        for (i, a) in positive_roots.iter().enumerate() {
            if a.len() != rank {
                return Err(Error::InvalidInput(format!("root {a} has length {}, expected {rank}", a.len())));
            }
            if a.iter().all(|&c| c == 0) {
                return Err(Error::InvalidInput("zero root".into()));
            }
            for b in &positive_roots[..i] {
                if parallel(a, b) {
                    return Err(Error::InvalidInput(format!("roots {b} and {a} are parallel")));
                }
            }
        }
        Ok(RootSystem { rank, positive_roots, label: RootSystemLabel::Custom })
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "SO4" | "so4" => Ok(Self::so4()),
            "Sp4" | "sp4" | "SP4" => Ok(Self::sp4()),
            _ => Err(Error::InvalidInput(format!("unknown root system `{name}`"))),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive_roots(&self) -> &[Vector<i64>] {
        &self.positive_roots
    }

    pub fn label(&self) -> &RootSystemLabel {
        &self.label
    }

    /// Sum of the positive roots.
    pub fn two_rho<T: Scalar>(&self) -> Vector<T> {
        let mut acc = Vector::<T>::zeros(self.rank);
        for a in &self.positive_roots {
            acc = &acc + &a.cast::<T>();
        }
        acc
    }

    /// `∏ ⟨prim(α), y⟩²` over the positive roots.
    pub fn weight_polynomial<T: Scalar>(&self) -> WeightPolynomial<T> {
        self.positive_roots.iter().fold(Polynomial::one(self.rank), |acc, a| {
            let a = primitive_i64(a).expect("roots are nonzero");
            let form = Polynomial::affine(&a.cast::<T>(), T::zero());
            acc.mul(&form.mul(&form))
        })
    }

    /// Closed chamber `{y : ⟨α, y⟩ ≥ 0}` with redundant walls removed.
    pub fn weyl_chamber(&self) -> Cone {
        let normals = self.positive_roots.iter().map(|a| primitive_i64(a).expect("nonzero")).collect();
        Cone::from_facets(self.rank, normals)
    }

    /// Closed cone generated by the positive roots; its interior is `Ξ`.
    pub fn xi_cone(&self) -> Result<Cone> {
        let rows: Vec<Vector<BigRational>> = self.positive_roots.iter().map(Vector::cast).collect();
        if rows.is_empty() || Matrix::from_rows(&rows).rank() < self.rank {
            return Err(Error::Degenerate("positive roots do not span; the root cone is not full-dimensional".into()));
        }
        Ok(Cone::from_generators(self.rank, self.positive_roots.clone()))
    }

    pub fn reflection<T: Scalar>(&self, root: &Vector<i64>) -> Matrix<T> {
        let a = root.cast::<T>();
        let norm = a.dot(&a);
        let two = T::from_int(2);
        let mut m = Matrix::<T>::identity(self.rank);
        for i in 0..self.rank {
            for j in 0..self.rank {
                let v = m[(i, j)].clone() - two.clone() * a[i].clone() * a[j].clone() / norm.clone();
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn weyl_group<T: Scalar>(&self) -> Result<WeylGroup<T>> {
        WeylGroup::generate(self, WeylGroup::<T>::DEFAULT_CAP)
    }
}

fn parallel(a: &Vector<i64>, b: &Vector<i64>) -> bool {
    let n = a.len();
    (0..n).all(|i| (i + 1..n).all(|j| a[i] as i128 * b[j] as i128 == a[j] as i128 * b[i] as i128))
}

/// Polyhedral cone `{y : ⟨n, y⟩ ≥ 0 for all facet normals n}`, also described
/// by generators. Both descriptions use primitive integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    rank: usize,
    facet_normals: Vec<Vector<i64>>,
    generators: Vec<Vector<i64>>,
}

impl Cone {
    pub fn from_facets(rank: usize, normals: Vec<Vector<i64>>) -> Self {
        let facet_normals = irredundant(rank, normals);
        let generators = irredundant(rank, dual_generators(rank, &facet_normals));
        Cone { rank, facet_normals, generators }
    }

    pub fn from_generators(rank: usize, generators: Vec<Vector<i64>>) -> Self {
        let generators = irredundant(rank, generators);
        let facet_normals = irredundant(rank, dual_generators(rank, &generators));
        Cone { rank, facet_normals, generators }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn facet_normals(&self) -> &[Vector<i64>] {
        &self.facet_normals
    }

    pub fn generators(&self) -> &[Vector<i64>] {
        &self.generators
    }

    /// `⟨n, y⟩` for every facet normal `n`.
    pub fn slacks<T: Scalar>(&self, y: &Vector<T>) -> Vec<T> {
        self.facet_normals.iter().map(|n| n.cast::<T>().dot(y)).collect()
    }

    pub fn contains<T: Scalar>(&self, y: &Vector<T>) -> bool {
        self.slacks(y).iter().all(|s| !s.is_negative() || crate::numeric::is_zero(s))
    }
}

fn to_rational(v: &Vector<i64>) -> Vector<BigRational> {
    v.cast()
}

fn to_lattice(v: &Vector<BigRational>) -> Vector<i64> {
    let ints = crate::numeric::primitive_integer_direction(v.as_slice()).expect("nonzero direction");
    ints.iter().map(|a: &BigInt| a.to_i64().expect("lattice vector fits i64")).collect()
}

/// True when `v` is a nonnegative combination of `gens`. Carathéodory: it
/// suffices to try linearly independent subsets.
fn in_cone(rank: usize, v: &Vector<i64>, gens: &[Vector<i64>]) -> bool {
    if v.iter().all(|&c| c == 0) {
        return true;
    }
    let target = to_rational(v);
    let gens: Vec<Vector<BigRational>> = gens.iter().map(to_rational).collect();
    for k in 1..=rank.min(gens.len()) {
        for subset in combinations(gens.len(), k) {
            let cols: Vec<Vector<BigRational>> = subset.iter().map(|&i| gens[i].clone()).collect();
            // normal equations (AᵀA) c = Aᵀ v with A = [cols]
            let gram = Matrix::from_rows(
                &cols.iter().map(|a| cols.iter().map(|b| a.dot(b)).collect()).collect::<Vec<Vector<_>>>(),
            );
            let rhs: Vector<BigRational> = cols.iter().map(|a| a.dot(&target)).collect();
            let Ok(c) = gram.solve(&rhs) else { continue };
            if c.iter().any(Signed::is_negative) {
                continue;
            }
            let mut combo = Vector::<BigRational>::zeros(rank);
            for (ci, a) in c.iter().zip(&cols) {
                combo = &combo + &a.scale(ci);
            }
            if combo == target {
                return true;
            }
        }
    }
    false
}

/// Drops zero vectors, repeated directions, and vectors that lie in the cone
/// spanned by the remaining ones. Output is primitive.
fn irredundant(rank: usize, vecs: Vec<Vector<i64>>) -> Vec<Vector<i64>> {
    let mut unique: Vec<Vector<i64>> = Vec::new();
    for v in vecs {
        if v.iter().all(|&c| c == 0) {
            continue;
        }
        let p = primitive_i64(&v).expect("nonzero");
        if !unique.contains(&p) {
            unique.push(p);
        }
    }
    let mut kept = unique.clone();
    let mut i = 0;
    while i < kept.len() {
        let others: Vec<Vector<i64>> =
            kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
        if in_cone(rank, &kept[i], &others) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}

/// Generators of `{y : ⟨n, y⟩ ≥ 0 for n in normals}`: a lineality basis in
/// both signs plus the extreme rays of the pointed part.
fn dual_generators(rank: usize, normals: &[Vector<i64>]) -> Vec<Vector<i64>> {
    let rows: Vec<Vector<BigRational>> = normals.iter().map(to_rational).collect();
    let lineality: Vec<Vector<BigRational>> = if rows.is_empty() {
        (0..rank).map(|i| to_rational(&unit(rank, i))).collect()
    } else {
        Matrix::from_rows(&rows).nullspace()
    };
    let mut out = Vec::new();
    for l in &lineality {
        let l = to_lattice(l);
        out.push(l.clone());
        out.push(l.iter().map(|c| -c).collect());
    }
    let k = rank - lineality.len();
    if k == 0 {
        return out;
    }
    for subset in combinations(rows.len(), k - 1) {
        let mut span: Vec<Vector<BigRational>> = subset.iter().map(|&i| rows[i].clone()).collect();
        span.extend(lineality.iter().cloned());
        let d = orthogonal_complement(&span);
        if d.is_zero_vector() {
            continue;
        }
        for cand in [d.clone(), -&d] {
            if rows.iter().all(|n| !n.dot(&cand).is_negative()) {
                out.push(to_lattice(&cand));
            }
        }
    }
    out
}

fn unit(rank: usize, i: usize) -> Vector<i64> {
    (0..rank).map(|j| i64::from(i == j)).collect()
}

/// Finite reflection group generated by the reflections in the Weyl walls.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylGroup<T> {
    elements: Vec<Matrix<T>>,
}

impl<T: Scalar> WeylGroup<T> {
    pub const DEFAULT_CAP: usize = 10_000;

    /// Breadth-first closure under the generating reflections.
    pub fn generate(rs: &RootSystem, cap: usize) -> Result<Self> {
        let gens: Vec<Matrix<T>> = rs.positive_roots().iter().map(|a| rs.reflection(a)).collect();
        let id = Matrix::<T>::identity(rs.rank());
        let key = |m: &Matrix<T>| -> Vec<BigRational> {
            (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                .map(|ij| m[ij].to_rational().unwrap_or_else(BigRational::zero))
                .collect()
        };
        let mut seen = HashSet::new();
        seen.insert(key(&id));
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let next = g.mul_mat(&w);
                if seen.insert(key(&next)) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge(cap));
                    }
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(WeylGroup { elements })
    }

    pub fn trivial(rank: usize) -> Self {
        WeylGroup { elements: vec![Matrix::identity(rank)] }
    }

    pub fn elements(&self) -> &[Matrix<T>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}
