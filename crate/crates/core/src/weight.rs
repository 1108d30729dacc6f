//! Weight-3 components Γ(E)(3) of the free operad on one binary operation.
//!
//! The regular class has the 12 monomials `(x_i·x_j)·x_k` and
//! `x_i·(x_j·x_k)`, ordered by shape (left-nested first) and then by the
//! lexicographic order of the leaf arrangement. The commutative and
//! anticommutative classes use the comb basis
//!
//! * `m1 = (x1·x2)·x3`
//! * `m2 = (x2·x3)·x1`
//! * `m3 = (x3·x1)·x2`
//!
//! indexed by the unordered inner pair. In the anticommutative class a
//! monomial is rewritten with `a·b = −b·a` until it matches one of these
//! representatives.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupVector, Perm3, Sigma3Action};
use crate::linalg::{add_scaled, is_zero_vec, rat, unit_vec, zero_vec, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymmetryClass {
    /// E = 11 ⊕ Sgn₂: the operation has no symmetry.
    #[serde(rename = "regular")]
    Regular,
    /// E = 11.
    #[serde(rename = "comm")]
    Commutative,
    /// E = Sgn₂.
    #[serde(rename = "anticomm")]
    Anticommutative,
}

impl SymmetryClass {
    pub fn weight3_dim(self) -> usize {
        match self {
            SymmetryClass::Regular => 12,
            SymmetryClass::Commutative | SymmetryClass::Anticommutative => 3,
        }
    }

    pub fn is_symmetric(self) -> bool {
        self != SymmetryClass::Regular
    }

    pub fn keyword(self) -> &'static str {
        match self {
            SymmetryClass::Regular => "regular",
            SymmetryClass::Commutative => "comm",
            SymmetryClass::Anticommutative => "anticomm",
        }
    }

    pub fn from_keyword(word: &str) -> Option<SymmetryClass> {
        match word {
            "regular" => Some(SymmetryClass::Regular),
            "comm" | "commutative" => Some(SymmetryClass::Commutative),
            "anticomm" | "anticommutative" => Some(SymmetryClass::Anticommutative),
            _ => None,
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// `(x_i·x_j)·x_k`
    Left,
    /// `x_i·(x_j·x_k)`
    Right,
}

/// Leaf arrangements in lexicographic order.
pub const ARRANGEMENTS: [[u8; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

/// A monomial of the regular weight-3 space; `labels` are the variable
/// indices read left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial3 {
    pub shape: Shape,
    pub labels: [u8; 3],
}

impl Monomial3 {
    pub fn left(labels: [u8; 3]) -> Self {
        Monomial3 {
            shape: Shape::Left,
            labels,
        }
    }

    pub fn right(labels: [u8; 3]) -> Self {
        Monomial3 {
            shape: Shape::Right,
            labels,
        }
    }

    pub fn all() -> impl Iterator<Item = Monomial3> {
        (0..12).map(Monomial3::from_index)
    }

    pub fn index(self) -> usize {
        let arr = ARRANGEMENTS
            .iter()
            .position(|a| *a == self.labels)
            .expect("labels form an arrangement of 1, 2, 3");
        match self.shape {
            Shape::Left => arr,
            Shape::Right => 6 + arr,
        }
    }

    pub fn from_index(i: usize) -> Self {
        let shape = if i < 6 { Shape::Left } else { Shape::Right };
        Monomial3 {
            shape,
            labels: ARRANGEMENTS[i % 6],
        }
    }

    /// `σ(m)`: every label `i` is replaced by `σ⁻¹(i)`.
    pub fn act(self, g: Perm3) -> Self {
        let inv = g.inverse();
        Monomial3 {
            shape: self.shape,
            labels: self.labels.map(|l| inv.apply(l)),
        }
    }

    /// Sign of the arrangement as a permutation of (1, 2, 3).
    pub fn label_sign(self) -> i64 {
        Perm3::from_images(self.labels).unwrap().sign()
    }

    /// Comb-basis index and sign of this monomial in a symmetric class.
    pub fn to_comb(self, target: SymmetryClass) -> (usize, i64) {
        let [a, b, c] = self.labels;
        let (pair, outer_sign) = match self.shape {
            Shape::Left => ((a, b), 1),
            Shape::Right => ((b, c), -1),
        };
        let (idx, orient) = comb_pair(pair);
        let sign = match target {
            SymmetryClass::Commutative => 1,
            SymmetryClass::Anticommutative => orient * outer_sign,
            SymmetryClass::Regular => unreachable!("comb basis only exists for symmetric classes"),
        };
        (idx, sign)
    }

    /// Text form `(x1*x2)*x3` or `x1*(x2*x3)`.
    pub fn text(self) -> String {
        let [a, b, c] = self.labels;
        match self.shape {
            Shape::Left => format!("(x{a}*x{b})*x{c}"),
            Shape::Right => format!("x{a}*(x{b}*x{c})"),
        }
    }
}

impl fmt::Display for Monomial3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// Canonical ordered pairs (1,2), (2,3), (3,1) of the comb basis.
const COMB_PAIRS: [(u8, u8); 3] = [(1, 2), (2, 3), (3, 1)];

/// Comb index of an unordered pair plus +1 when `pair` has the canonical
/// orientation, −1 otherwise.
fn comb_pair(pair: (u8, u8)) -> (usize, i64) {
    for (i, &(a, b)) in COMB_PAIRS.iter().enumerate() {
        if pair == (a, b) {
            return (i, 1);
        }
        if pair == (b, a) {
            return (i, -1);
        }
    }
    unreachable!("pair of distinct labels")
}

/// Left-nested representative `(x_a·x_b)·x_c` of comb monomial `m_{i+1}`.
pub fn comb_representative(i: usize) -> Monomial3 {
    let (a, b) = COMB_PAIRS[i];
    Monomial3::left([a, b, 6 - a - b])
}

/// An element of Γ(E)(3) for one symmetry class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight3Element {
    symmetry: SymmetryClass,
    coords: Vec<Rational>,
}

impl Weight3Element {
    pub fn zero(symmetry: SymmetryClass) -> Self {
        Weight3Element {
            symmetry,
            coords: zero_vec(symmetry.weight3_dim()),
        }
    }

    pub fn from_coords(symmetry: SymmetryClass, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != symmetry.weight3_dim() {
            return Err(Error::DimensionMismatch {
                expected: symmetry.weight3_dim(),
                found: coords.len(),
            });
        }
        Ok(Weight3Element { symmetry, coords })
    }

    pub fn monomial(m: Monomial3) -> Self {
        Weight3Element {
            symmetry: SymmetryClass::Regular,
            coords: unit_vec(12, m.index()),
        }
    }

    /// Comb monomial `m_{i+1}` in a symmetric class.
    pub fn comb(symmetry: SymmetryClass, i: usize) -> Result<Self> {
        if !symmetry.is_symmetric() {
            return Err(Error::UnsupportedSymmetry(symmetry, "comb monomials"));
        }
        Ok(Weight3Element {
            symmetry,
            coords: unit_vec(3, i),
        })
    }

    /// `(x_a·x_b)·x_c − x_a·(x_b·x_c)`.
    pub fn associator(labels: [u8; 3]) -> Self {
        &Weight3Element::monomial(Monomial3::left(labels))
            - &Weight3Element::monomial(Monomial3::right(labels))
    }

    pub fn symmetry(&self) -> SymmetryClass {
        self.symmetry
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn coeff(&self, m: Monomial3) -> &Rational {
        &self.coords[m.index()]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Weight3Element {
            symmetry: self.symmetry,
            coords: self.coords.iter().map(|x| x * s).collect(),
        }
    }

    /// Nonzero terms as `(basis index, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// The Σ₃ action, extended linearly.
    pub fn act(&self, g: Perm3) -> Self {
        match self.symmetry {
            SymmetryClass::Regular => {
                let mut coords = zero_vec(12);
                for (i, c) in self.terms() {
                    coords[Monomial3::from_index(i).act(g).index()] += c;
                }
                Weight3Element {
                    symmetry: self.symmetry,
                    coords,
                }
            }
            sym => self.lift().act(g).project(sym).expect("regular input"),
        }
    }

    /// Rewrites a regular element in the comb basis of a symmetric class.
    pub fn project(&self, target: SymmetryClass) -> Result<Self> {
        if self.symmetry != SymmetryClass::Regular {
            return Err(Error::UnsupportedSymmetry(self.symmetry, "projection input"));
        }
        if target == SymmetryClass::Regular {
            return Ok(self.clone());
        }
        let mut coords = zero_vec(3);
        for (i, c) in self.terms() {
            let (idx, sign) = Monomial3::from_index(i).to_comb(target);
            if sign > 0 {
                coords[idx] += c;
            } else {
                coords[idx] -= c;
            }
        }
        Ok(Weight3Element {
            symmetry: target,
            coords,
        })
    }

    /// A regular preimage under [`project`](Self::project): each comb monomial
    /// goes to its left-nested representative. Regular elements are returned
    /// unchanged.
    pub fn lift(&self) -> Self {
        if self.symmetry == SymmetryClass::Regular {
            return self.clone();
        }
        let mut coords = zero_vec(12);
        for (i, c) in self.terms() {
            coords[comb_representative(i).index()] = c.clone();
        }
        Weight3Element {
            symmetry: SymmetryClass::Regular,
            coords,
        }
    }

    /// Lift that splits each comb monomial evenly between its left- and
    /// right-nested representatives, `m ↦ ½((x_a·x_b)·x_c ± x_c·(x_a·x_b))`.
    pub fn balanced_lift(&self) -> Self {
        if self.symmetry == SymmetryClass::Regular {
            return self.clone();
        }
        let half = Rational::new(1.into(), 2.into());
        let mut coords = zero_vec(12);
        for (i, c) in self.terms() {
            let left = comb_representative(i);
            let [a, b, k] = left.labels;
            let right = Monomial3::right([k, a, b]);
            let (_, sign) = right.to_comb(self.symmetry);
            coords[left.index()] += c * &half;
            coords[right.index()] += c * &half * rat(sign);
        }
        Weight3Element {
            symmetry: SymmetryClass::Regular,
            coords,
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.symmetry, other.symmetry,
            "weight-3 elements from different symmetry classes"
        );
    }
}

impl<'a> Add for &'a Weight3Element {
    type Output = Weight3Element;
    fn add(self, rhs: &'a Weight3Element) -> Weight3Element {
        self.check_same(rhs);
        let mut coords = self.coords.clone();
        add_scaled(&mut coords, &Rational::one(), &rhs.coords);
        Weight3Element {
            symmetry: self.symmetry,
            coords,
        }
    }
}

impl<'a> Sub for &'a Weight3Element {
    type Output = Weight3Element;
    fn sub(self, rhs: &'a Weight3Element) -> Weight3Element {
        self.check_same(rhs);
        let mut coords = self.coords.clone();
        add_scaled(&mut coords, &-Rational::one(), &rhs.coords);
        Weight3Element {
            symmetry: self.symmetry,
            coords,
        }
    }
}

impl Neg for &Weight3Element {
    type Output = Weight3Element;
    fn neg(self) -> Weight3Element {
        self.scale(&-Rational::one())
    }
}

impl Sigma3Action for SymmetryClass {
    fn ambient_dim(&self) -> usize {
        self.weight3_dim()
    }

    fn act(&self, g: Perm3, x: &[Rational]) -> Vec<Rational> {
        Weight3Element::from_coords(*self, x.to_vec())
            .expect("vector matches the weight-3 dimension")
            .act(g)
            .into_coords()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    L,
    R,
}

/// Ψ^L_v((x₁·x₂)·x₃) or Ψ^R_v(x₁·(x₂·x₃)).
pub fn psi(v: &GroupVector, side: Side) -> Weight3Element {
    let base = match side {
        Side::L => Monomial3::left([1, 2, 3]),
        Side::R => Monomial3::right([1, 2, 3]),
    };
    let mut coords = zero_vec(12);
    for g in Perm3::ALL {
        let c = v.coeff(g);
        if !c.is_zero() {
            coords[base.act(g).index()] += c;
        }
    }
    Weight3Element {
        symmetry: SymmetryClass::Regular,
        coords,
    }
}

/// `Ψ^L_v((x₁·x₂)·x₃) − Ψ^R_w(x₁·(x₂·x₃))`.
pub fn presentation_vector(v: &GroupVector, w: &GroupVector) -> Weight3Element {
    &psi(v, Side::L) - &psi(w, Side::R)
}

/// The unique `(v, w)` with `X = Ψ^L_v − Ψ^R_w`.
pub fn decompose_lr(x: &Weight3Element) -> Result<(GroupVector, GroupVector)> {
    if x.symmetry != SymmetryClass::Regular {
        return Err(Error::UnsupportedSymmetry(x.symmetry, "L/R decomposition"));
    }
    let mut v = [(); 6].map(|_| Rational::zero());
    let mut w = [(); 6].map(|_| Rational::zero());
    for g in Perm3::ALL {
        let labels = g.inverse().images();
        v[g.index()] = x.coeff(Monomial3::left(labels)).clone();
        w[g.index()] = -x.coeff(Monomial3::right(labels)).clone();
    }
    Ok((GroupVector::from_coeffs(v), GroupVector::from_coeffs(w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(m: Monomial3) -> Weight3Element {
        Weight3Element::monomial(m)
    }

    #[test]
    fn monomial_indexing_round_trips() {
        for i in 0..12 {
            assert_eq!(Monomial3::from_index(i).index(), i);
        }
        assert_eq!(Monomial3::from_index(0).text(), "(x1*x2)*x3");
        assert_eq!(Monomial3::from_index(6).text(), "x1*(x2*x3)");
    }

    #[test]
    fn action_examples() {
        let x = mono(Monomial3::left([1, 2, 3]));
        assert_eq!(x.act(Perm3::ID), x);
        assert_eq!(x.act(Perm3::T23), mono(Monomial3::left([1, 3, 2])));
        let y = mono(Monomial3::right([1, 2, 3]));
        assert_eq!(y.act(Perm3::C1), mono(Monomial3::right([3, 1, 2])));
    }

    #[test]
    fn action_composition_law_on_all_monomials() {
        for m in Monomial3::all() {
            for a in Perm3::ALL {
                for b in Perm3::ALL {
                    assert_eq!(m.act(a * b), m.act(b).act(a));
                }
            }
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&GroupVector::identity(), Side::L), mono(Monomial3::left([1, 2, 3])));
        let v = &GroupVector::identity() - &GroupVector::basis(Perm3::T23);
        assert_eq!(
            psi(&v, Side::R),
            &mono(Monomial3::right([1, 2, 3])) - &mono(Monomial3::right([1, 3, 2]))
        );
        let three = GroupVector::from_ints([3, 0, 0, 0, 0, 0]);
        assert_eq!(psi(&three, Side::R), mono(Monomial3::right([1, 2, 3])).scale(&rat(3)));
    }

    #[test]
    fn decompose_associator_and_leibniz() {
        let (v, w) = decompose_lr(&Weight3Element::associator([1, 2, 3])).unwrap();
        assert_eq!(v, GroupVector::identity());
        assert_eq!(w, GroupVector::identity());

        // −x1(x2x3) + (x1x2)x3 − (x1x3)x2
        let leib = &(&mono(Monomial3::left([1, 2, 3])) - &mono(Monomial3::right([1, 2, 3])))
            - &mono(Monomial3::left([1, 3, 2]));
        let (v, w) = decompose_lr(&leib).unwrap();
        assert_eq!(v, &GroupVector::identity() - &GroupVector::basis(Perm3::T23));
        assert_eq!(w, GroupVector::identity());
    }

    #[test]
    fn decompose_rejects_symmetric_input() {
        let x = Weight3Element::comb(SymmetryClass::Commutative, 0).unwrap();
        assert!(decompose_lr(&x).is_err());
    }

    #[test]
    fn projection_examples() {
        let com = SymmetryClass::Commutative;
        let anti = SymmetryClass::Anticommutative;
        let m = |i| Weight3Element::comb(com, i).unwrap();
        assert_eq!(
            Weight3Element::associator([1, 2, 3]).project(com).unwrap(),
            &m(0) - &m(1)
        );
        assert_eq!(mono(Monomial3::left([2, 1, 3])).project(com).unwrap(), m(0));
        assert_eq!(
            mono(Monomial3::right([1, 2, 3])).project(anti).unwrap(),
            -&Weight3Element::comb(anti, 1).unwrap()
        );
    }

    #[test]
    fn projected_jacobi_is_multiple_of_comb_sum() {
        // x1(x2x3) + x2(x3x1) + x3(x1x2)
        let jac = [[1, 2, 3], [2, 3, 1], [3, 1, 2]]
            .into_iter()
            .map(|l| mono(Monomial3::right(l)))
            .fold(Weight3Element::zero(SymmetryClass::Regular), |a, b| &a + &b);
        let p = jac.project(SymmetryClass::Anticommutative).unwrap();
        assert!(!p.is_zero());
        assert!(p.coords().iter().all(|c| c == &p.coords()[0]));
    }

    #[test]
    fn lifts_are_sections_of_projection() {
        for sym in [SymmetryClass::Commutative, SymmetryClass::Anticommutative] {
            for i in 0..3 {
                let m = Weight3Element::comb(sym, i).unwrap();
                assert_eq!(m.lift().project(sym).unwrap(), m);
                assert_eq!(m.balanced_lift().project(sym).unwrap(), m);
            }
        }
    }

    #[test]
    fn anticommutative_action_is_signed_permutation() {
        let anti = SymmetryClass::Anticommutative;
        let m1 = Weight3Element::comb(anti, 0).unwrap();
        // a transposition reverses the cyclic orientation of every pair
        assert_eq!(m1.act(Perm3::T12), -&m1);
        assert_eq!(m1.act(Perm3::C1).act(Perm3::C2), m1);
    }
}
