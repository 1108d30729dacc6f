//! Exact rational vectors and subspaces.
//!
//! Every subspace is kept in reduced row-echelon form, so two [`Subspace`]
//! values describe the same space exactly when they compare equal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(len: usize) -> Vec<Rational> {
    vec![Rational::zero(); len]
}

pub fn unit_vec(len: usize, at: usize) -> Vec<Rational> {
    let mut v = zero_vec(len);
    v[at] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += scale * b;
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .sum()
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Row-reduces `rows` in place to reduced row-echelon form, dropping zero
/// rows. Returns the pivot column of each surviving row.
fn rref(rows: &mut Vec<Vec<Rational>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(found) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, found);
        let inv = rows[rank][col].recip();
        for x in rows[rank].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = -row[col].clone();
            add_scaled(row, &factor, &pivot_row);
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Sum,
    Intersection,
}

/// A linear subspace of `K^n` in canonical reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vec(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of `vectors`; zero and repeated vectors are fine.
    pub fn span<I, V>(vectors: I, ambient_dim: usize) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Rational]>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if !is_zero_vec(v) {
                rows.push(v.to_vec());
            }
        }
        let pivots = rref(&mut rows, ambient_dim);
        Ok(Subspace {
            ambient_dim,
            basis: rows,
            pivots,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.ambient_dim {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: len,
            })
        } else {
            Ok(())
        }
    }

    /// Normal form of `v` modulo the subspace: the result vanishes on every
    /// pivot column and differs from `v` by an element of the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let factor = -out[p].clone();
                add_scaled(&mut out, &factor, row);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        self.check_len(other.ambient_dim)?;
        for b in &other.basis {
            if !self.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        let free = self.free_columns();
        let vectors: Vec<Vec<Rational>> = free
            .iter()
            .map(|&f| {
                let mut v = unit_vec(self.ambient_dim, f);
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect();
        Subspace::span(vectors, self.ambient_dim).expect("complement vectors have ambient length")
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        Subspace::span(self.basis.iter().chain(&other.basis), self.ambient_dim)
    }

    /// Intersection as the common kernel of both annihilators.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_len(other.ambient_dim)?;
        let a = self.orthogonal_complement();
        let b = other.orthogonal_complement();
        Ok(a.sum(&b)?.orthogonal_complement())
    }

    pub fn combine(&self, other: &Subspace, mode: CombineMode) -> Result<Subspace> {
        match mode {
            CombineMode::Sum => self.sum(other),
            CombineMode::Intersection => self.intersection(other),
        }
    }

    /// Smallest-denominator-free rescaling of each basis row, for display.
    pub fn integral_basis(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|row| integral_row(row)).collect()
    }
}

/// Scales a vector so its entries are coprime integers with a positive
/// leading entry.
pub fn integral_row(row: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = row.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return row.to_vec();
    }
    let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    if lead_negative {
        g = -g;
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn empty_span_is_zero() {
        let s = Subspace::span(Vec::<Vec<Rational>>::new(), 12).unwrap();
        assert_eq!(s.dim(), 0);
        assert_eq!(s, Subspace::zero(12));
    }

    #[test]
    fn spanning_set_gives_full_space() {
        let s = Subspace::span([v(&[1, 0]), v(&[0, 1]), v(&[1, 1])], 2).unwrap();
        assert_eq!(s, Subspace::full(2));
    }

    #[test]
    fn contains_edge_cases() {
        assert!(Subspace::zero(3).contains(&v(&[0, 0, 0])).unwrap());
        let s = Subspace::span([v(&[1, 0])], 2).unwrap();
        assert!(!s.contains(&v(&[0, 1])).unwrap());
        assert!(s.contains(&v(&[-7, 0])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        assert!(matches!(
            Subspace::span([v(&[1, 0]), v(&[1])], 2),
            Err(Error::DimensionMismatch { expected: 2, found: 1 })
        ));
        let s = Subspace::full(2);
        assert!(s.contains(&v(&[1, 2, 3])).is_err());
        assert!(s.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn combine_identities() {
        let s = Subspace::span([v(&[1, 2, 0, 1]), v(&[0, 1, 1, 1])], 4).unwrap();
        assert_eq!(s.combine(&Subspace::zero(4), CombineMode::Sum).unwrap(), s);
        assert_eq!(s.combine(&s, CombineMode::Intersection).unwrap(), s);
        let t = Subspace::span([v(&[1, 3, 1, 2]), v(&[0, 0, 0, 1])], 4).unwrap();
        let sum = s.sum(&t).unwrap();
        let cap = s.intersection(&t).unwrap();
        assert_eq!(s.dim() + t.dim(), sum.dim() + cap.dim());
        assert_eq!(cap.dim(), 1);
        assert!(cap.contains(&v(&[1, 3, 1, 2])).unwrap());
    }

    #[test]
    fn complement_is_orthogonal() {
        let s = Subspace::span([v(&[1, 1, 1])], 3).unwrap();
        let c = s.orthogonal_complement();
        assert_eq!(c.dim(), 2);
        for b in c.basis() {
            assert!(dot(b, &v(&[1, 1, 1])).is_zero());
        }
    }

    #[test]
    fn rational_text_round_trip() {
        let r = ratio(-6, 4);
        assert_eq!(fmt_rational(&r), "-3/2");
        assert_eq!(parse_rational("-3/2"), Some(r));
        assert_eq!(parse_rational("5"), Some(rat(5)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn integral_rows() {
        let row = vec![ratio(-1, 2), ratio(1, 3), rat(0)];
        assert_eq!(integral_row(&row), v(&[3, -2, 0]));
    }
}
