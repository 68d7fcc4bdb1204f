//! Scalars, dense vectors and small dense matrices.
//!
//! Everything downstream is generic over [`Scalar`]. The exact pipeline runs
//! on [`BigRational`]; `f64`/`f32` are supported for approximate work and get a
//! small comparison tolerance instead of exact sign tests.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Field-like scalar usable by the geometry and integration code.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// True when arithmetic is exact and comparisons need no tolerance.
    const EXACT: bool;

    /// Absolute tolerance for sign decisions. Zero for exact types.
    fn tolerance() -> Self;

    /// Exact rational value, if representable.
    fn to_rational(&self) -> Option<BigRational>;

    fn from_rational(q: &BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits scalar")
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn tolerance() -> Self {
        Self::zero()
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

macro_rules! impl_float_scalar {
    ($t:ty, $tol:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn tolerance() -> Self {
                $tol
            }

            fn to_rational(&self) -> Option<BigRational> {
                BigRational::from_float(*self)
            }

            fn from_rational(q: &BigRational) -> Self {
                q.to_f64().unwrap_or(f64::NAN) as $t
            }
        }
    };
}

impl_float_scalar!(f64, 1e-9);
impl_float_scalar!(f32, 1e-4);

/// Sign of `x` up to the scalar's tolerance.
pub fn sign<T: Scalar>(x: &T) -> Ordering {
    let tol = T::tolerance();
    if *x > tol {
        Ordering::Greater
    } else if *x < -tol {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

pub fn is_zero<T: Scalar>(x: &T) -> bool {
    sign(x) == Ordering::Equal
}

pub fn approx_eq<T: Scalar>(a: &T, b: &T) -> bool {
    is_zero(&(a.clone() - b.clone()))
}

pub fn factorial<T: Scalar>(n: u32) -> T {
    (1..=n).fold(T::one(), |acc, k| acc * T::from_u32(k).expect("small integer"))
}

/// Exact text form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Approximate decimal text with 12 significant digits, prefixed by `~`.
pub fn format_decimal(q: &BigRational) -> String {
    let v = q.to_f64().unwrap_or(f64::NAN);
    if v == 0.0 {
        return "~0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    if (-4..12).contains(&magnitude) {
        let decimals = (11 - magnitude).max(0) as usize;
        let s = format!("{v:.decimals$}");
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        format!("~{s}")
    } else {
        format!("~{v:.11e}")
    }
}

/// How rationals are rendered in reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NumberFormat {
    #[default]
    Exact,
    /// 12 significant digits, marked approximate.
    Decimal,
}

impl NumberFormat {
    pub fn render(self, q: &BigRational) -> String {
        match self {
            NumberFormat::Exact => format_rational(q),
            NumberFormat::Decimal => format_decimal(q),
        }
    }
}

/// Parses `p/q` or an integer literal. Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Dense vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector<T>(pub Vec<T>);

impl<T> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Vector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }
}

impl<T: Clone + Num> Vector<T> {
    pub fn zeros(len: usize) -> Self {
        Vector(vec![T::zero(); len])
    }

    pub fn dot(&self, other: &Self) -> T {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.0.iter().zip(&other.0).fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn scale(&self, t: &T) -> Self {
        Vector(self.0.iter().map(|a| a.clone() * t.clone()).collect())
    }

    pub fn is_zero_vector(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Vector<i64> {
    /// Converts an integer vector into any scalar type.
    pub fn cast<T: Scalar>(&self) -> Vector<T> {
        Vector(self.0.iter().map(|&a| T::from_int(a)).collect())
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T> IndexMut<usize> for Vector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.0[i]
    }
}

impl<T> FromIterator<T> for Vector<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

impl<T: Clone + Num> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: Self) -> Vector<T> {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() + b.clone()).collect()
    }
}

impl<T: Clone + Num> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: Self) -> Vector<T> {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        self.0.iter().zip(&rhs.0).map(|(a, b)| a.clone() - b.clone()).collect()
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        self.0.iter().map(|a| -a.clone()).collect()
    }
}

impl<T: Display> Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison for vectors of partially ordered scalars.
pub fn lex_cmp<T: PartialOrd>(a: &Vector<T>, b: &Vector<T>) -> Ordering {
    for (x, y) in a.0.iter().zip(&b.0) {
        match x.partial_cmp(y) {
            Some(Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Divides an integral rational vector by the gcd of its entries.
pub fn primitive(v: &Vector<BigRational>) -> Result<Vector<BigRational>> {
    if v.iter().any(|a| !a.is_integer()) {
        return Err(Error::InvalidInput(format!("primitive needs integer entries, got {v}")));
    }
    let ints: Vec<BigInt> = v.iter().map(|a| a.to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    if g.is_zero() {
        return Err(Error::InvalidInput("primitive of the zero vector".into()));
    }
    Ok(ints.into_iter().map(|a| BigRational::from_integer(a / &g)).collect())
}

/// Primitive integer vector on the ray through a rational vector.
pub fn primitive_integer_direction(v: &[BigRational]) -> Result<Vec<BigInt>> {
    let lcm = v.iter().fold(BigInt::one(), |l, a| l.lcm(a.denom()));
    let ints: Vec<BigInt> = v.iter().map(|a| (a * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    if g.is_zero() {
        return Err(Error::InvalidInput("direction of the zero vector".into()));
    }
    Ok(ints.into_iter().map(|a| a / &g).collect())
}

pub fn primitive_i64(v: &Vector<i64>) -> Result<Vector<i64>> {
    let g = v.iter().fold(0i64, |g, a| g.gcd(a));
    if g == 0 {
        return Err(Error::InvalidInput("primitive of the zero vector".into()));
    }
    Ok(v.iter().map(|a| a / g).collect())
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: &[Vector<T>]) -> Self {
        let cols = rows.first().map_or(0, Vector::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.iter().flat_map(|r| r.0.iter().cloned()).collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows * cols != data.len() {
            return Err(Error::InvalidInput(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector<T> {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }
}

impl<T: Clone + Num> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Matrix { rows: n, cols: n, data }
    }

    pub fn mul_vec(&self, v: &Vector<T>) -> Vector<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| self.row(i).dot(v)).collect()
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
                }
                data.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: other.cols, data }
    }
}

impl<T: Scalar> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination. Every division is
    /// exact over an integral domain, so integer-valued input stays integral.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::InvalidInput(format!("determinant of non-square {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut prev = T::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if is_zero(&a[(k, k)]) {
                let Some(p) = (k + 1..n).find(|&i| !is_zero(&a[(i, k)])) else {
                    return Ok(T::zero());
                };
                a.swap_rows(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v =
                        (a[(k, k)].clone() * a[(i, j)].clone() - a[(i, k)].clone() * a[(k, j)].clone()) / prev.clone();
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if negate { -d } else { d })
    }

    /// Solves `self * x = b` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, b: &Vector<T>) -> Result<Vector<T>> {
        if self.rows != self.cols || b.len() != self.rows {
            return Err(Error::InvalidInput("solve needs a square system".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut rhs = b.clone();
        for k in 0..n {
            let p = (k..n)
                .filter(|&i| !is_zero(&a[(i, k)]))
                .max_by(|&i, &j| a[(i, k)].abs().partial_cmp(&a[(j, k)].abs()).unwrap_or(Ordering::Equal))
                .ok_or(Error::Singular)?;
            if p != k {
                a.swap_rows(k, p);
                rhs.0.swap(k, p);
            }
            for i in k + 1..n {
                let f = a[(i, k)].clone() / a[(k, k)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = a[(i, j)].clone() - f.clone() * a[(k, j)].clone();
                    a[(i, j)] = v;
                }
                rhs[i] = rhs[i].clone() - f * rhs[k].clone();
            }
        }
        let mut x = Vector::<T>::zeros(n);
        for i in (0..n).rev() {
            let mut s = rhs[i].clone();
            for j in i + 1..n {
                s = s - a[(i, j)].clone() * x[j].clone();
            }
            x[i] = s / a[(i, i)].clone();
        }
        Ok(x)
    }

    /// Rank up to the scalar's tolerance.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows)
                .filter(|&i| !is_zero(&a[(i, col)]))
                .max_by(|&i, &j| a[(i, col)].abs().partial_cmp(&a[(j, col)].abs()).unwrap_or(Ordering::Equal))
            else {
                continue;
            };
            a.swap_rows(rank, p);
            for i in rank + 1..self.rows {
                let f = a[(i, col)].clone() / a[(rank, col)].clone();
                for j in col..self.cols {
                    let v = a[(i, j)].clone() - f.clone() * a[(rank, j)].clone();
                    a[(i, j)] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of the right null space `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vector<T>> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows)
                .filter(|&i| !is_zero(&a[(i, col)]))
                .max_by(|&i, &j| a[(i, col)].abs().partial_cmp(&a[(j, col)].abs()).unwrap_or(Ordering::Equal))
            else {
                continue;
            };
            a.swap_rows(row, p);
            let pivot = a[(row, col)].clone();
            for j in 0..self.cols {
                let v = a[(row, j)].clone() / pivot.clone();
                a[(row, j)] = v;
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let f = a[(i, col)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = a[(i, j)].clone() - f.clone() * a[(row, j)].clone();
                    a[(i, j)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut x = Vector::zeros(self.cols);
                x[free] = T::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = -a[(r, free)].clone();
                }
                x
            })
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone + Num> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.mul_mat(rhs)
    }
}

/// Vector orthogonal to `r - 1` vectors in dimension `r` (generalized cross
/// product by cofactors). Zero iff the inputs are linearly dependent.
pub fn orthogonal_complement<T: Scalar>(vectors: &[Vector<T>]) -> Vector<T> {
    let r = vectors.len() + 1;
    assert!(vectors.iter().all(|v| v.len() == r), "need r-1 vectors of length r");
    (0..r)
        .map(|skip| {
            let rows: Vec<Vector<T>> = vectors
                .iter()
                .map(|v| v.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, a)| a.clone()).collect())
                .collect();
            let minor = if rows.is_empty() { T::one() } else { Matrix::from_rows(&rows).det().expect("square minor") };
            if (skip + r - 1) % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect()
}

/// Combinations of `k` indices out of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rv(v: &[i64]) -> Vector<BigRational> {
        v.iter().map(|&a| q(a, 1)).collect()
    }

    fn rm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(&rows.iter().map(|r| rv(r)).collect::<Vec<_>>())
    }

    #[test]
    fn determinants() {
        assert_eq!(Matrix::<BigRational>::identity(2).det().unwrap(), q(1, 1));
        assert_eq!(rm(&[&[1, 0], &[1, -1]]).det().unwrap(), q(-1, 1));
        assert_eq!(rm(&[&[2, 0], &[0, 2]]).det().unwrap(), q(4, 1));
        assert_eq!(rm(&[&[0, 1], &[1, 0]]).det().unwrap(), q(-1, 1));
        assert_eq!(rm(&[&[2, 1, 3], &[0, 4, 1], &[5, 2, 0]]).det().unwrap(), q(-59, 1));
        assert_eq!(rm(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]).det().unwrap(), q(0, 1));
        assert!(Matrix::from_rows(&[rv(&[1, 2])]).det().is_err());
    }

    #[test]
    fn integer_input_gives_integer_det() {
        let d = rm(&[&[3, 2, 1], &[1, 1, 4], &[2, 7, 5]]).det().unwrap();
        // cofactor expansion along the first row
        assert_eq!(d, q(3 * (5 - 28) - 2 * (5 - 8) + (7 - 2), 1));
    }

    #[test]
    fn solves() {
        let id = Matrix::<BigRational>::identity(2);
        assert_eq!(id.solve(&rv(&[3, -3])).unwrap(), rv(&[3, -3]));
        assert_eq!(rm(&[&[1, -1], &[1, 1]]).solve(&rv(&[0, 6])).unwrap(), rv(&[3, 3]));
        assert!(matches!(rm(&[&[1, 1], &[1, 1]]).solve(&rv(&[1, 0])), Err(Error::Singular)));
        let x = rm(&[&[0, 2], &[3, 1]]).solve(&rv(&[1, 1])).unwrap();
        assert_eq!(x, Vector(vec![q(1, 6), q(1, 2)]));
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive(&rv(&[2, 0])).unwrap(), rv(&[1, 0]));
        assert_eq!(primitive(&rv(&[1, -1])).unwrap(), rv(&[1, -1]));
        assert_eq!(primitive(&rv(&[4, 2])).unwrap(), rv(&[2, 1]));
        assert_eq!(primitive(&rv(&[-6, 4])).unwrap(), rv(&[-3, 2]));
        assert!(primitive(&rv(&[0, 0])).is_err());
        assert!(primitive(&Vector(vec![q(1, 2), q(1, 1)])).is_err());
        assert_eq!(primitive_integer_direction(&[q(1, 2), q(-3, 4)]).unwrap(), vec![BigInt::from(2), BigInt::from(-3)]);
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&q(648, 5)), "648/5");
        assert_eq!(format_rational(&q(-4, 2)), "-2");
        assert_eq!(format_rational(&q(3, -7)), "-3/7");
        assert_eq!(parse_rational("-15/28").unwrap(), q(-15, 28));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert_eq!(parse_rational("4/6").unwrap(), q(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
        assert_eq!(format_decimal(&q(18, 7)), "~2.57142857143");
        assert_eq!(format_decimal(&q(648, 5)), "~129.6");
        assert_eq!(format_decimal(&q(0, 1)), "~0");
    }

    #[test]
    fn cross_products() {
        let n = orthogonal_complement(&[rv(&[1, 1])]);
        assert!(n.dot(&rv(&[1, 1])).is_zero());
        assert!(!n.is_zero_vector());
        let n = orthogonal_complement(&[rv(&[1, 0, 0]), rv(&[0, 1, 0])]);
        assert_eq!(n, rv(&[0, 0, 1]));
    }

    #[test]
    fn ranks() {
        assert_eq!(rm(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(rm(&[&[1, 2], &[2, 5]]).rank(), 2);
        assert_eq!(rm(&[&[0, 0], &[0, 0]]).rank(), 0);
    }

    #[test]
    fn nullspaces() {
        let ns = rm(&[&[1, -1]]).nullspace();
        assert_eq!(ns, vec![rv(&[1, 1])]);
        assert!(rm(&[&[1, 0], &[0, 1]]).nullspace().is_empty());
        let ns = rm(&[&[1, 2, 3]]).nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(rv(&[1, 2, 3]).dot(&v).is_zero());
        }
    }

    #[test]
    fn combination_counts() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn float_scalars_use_tolerance() {
        assert!(is_zero(&1e-12f64));
        assert!(!is_zero(&1e-6f64));
        let m = Matrix::from_rows(&[Vector(vec![1.0f64, 2.0]), Vector(vec![3.0, 4.0])]);
        assert!((m.det().unwrap() + 2.0).abs() < 1e-12);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = Vec<i64>> {
            prop::collection::vec(-9i64..=9, 9)
        }

        proptest! {
            #[test]
            fn solve_substitutes_back(entries in small_matrix(), b in prop::collection::vec(-9i64..=9, 3)) {
                let m = Matrix::from_vec(3, 3, entries.iter().map(|&a| q(a, 1)).collect()).unwrap();
                let b = rv(&b);
                match m.solve(&b) {
                    Ok(x) => prop_assert_eq!(m.mul_vec(&x), b),
                    Err(_) => prop_assert!(m.det().unwrap().is_zero()),
                }
            }

            #[test]
            fn repeated_row_has_zero_det(entries in prop::collection::vec(-9i64..=9, 6)) {
                let r0 = rv(&entries[0..3]);
                let r1 = rv(&entries[3..6]);
                let m = Matrix::from_rows(&[r0.clone(), r1, r0]);
                prop_assert!(m.det().unwrap().is_zero());
            }

            #[test]
            fn outputs_stay_reduced(entries in small_matrix(), b in prop::collection::vec(-9i64..=9, 3)) {
                let m = Matrix::from_vec(3, 3, entries.iter().map(|&a| q(a, 1)).collect()).unwrap();
                if let Ok(x) = m.solve(&rv(&b)) {
                    for c in x.iter() {
                        prop_assert!(c.denom() > &BigInt::zero());
                        prop_assert!(c.numer().gcd(c.denom()).is_one());
                    }
                }
            }
        }
    }
}
