//! The symmetric group Σ₃, its group algebra, and isotypic decomposition of
//! Σ₃-modules.
//!
//! Permutations compose left to right: `s * r` applies `s` first and then
//! `r`. Under this convention the relabelling action
//! `σ(x_i·(x_j·x_k)) = x_{σ⁻¹(i)}·(x_{σ⁻¹(j)}·x_{σ⁻¹(k)})` is a left action,
//! i.e. `act(s * r, X) = act(s, act(r, X))`, and the action of Σ₃ on
//! `K[Σ₃]` is left translation `v ↦ σ * v`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, rat, ratio, zero_vec, Rational, Subspace};

/// A permutation of `{1, 2, 3}`, stored as its images (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3([u8; 3]);

impl Perm3 {
    pub const ID: Perm3 = Perm3([0, 1, 2]);
    pub const T12: Perm3 = Perm3([1, 0, 2]);
    pub const T13: Perm3 = Perm3([2, 1, 0]);
    pub const T23: Perm3 = Perm3([0, 2, 1]);
    /// The cycle (1,2,3): 1 ↦ 2 ↦ 3 ↦ 1.
    pub const C1: Perm3 = Perm3([1, 2, 0]);
    /// The cycle (1,3,2): 1 ↦ 3 ↦ 2 ↦ 1.
    pub const C2: Perm3 = Perm3([2, 0, 1]);

    /// Σ₃ in its fixed enumeration order (Id, τ₁₂, τ₁₃, τ₂₃, c₁, c₂).
    pub const ALL: [Perm3; 6] = [
        Perm3::ID,
        Perm3::T12,
        Perm3::T13,
        Perm3::T23,
        Perm3::C1,
        Perm3::C2,
    ];

    const NAMES: [&'static str; 6] = ["Id", "t12", "t13", "t23", "c1", "c2"];

    /// Builds a permutation from 1-based images; `None` unless a bijection.
    pub fn from_images(images: [u8; 3]) -> Option<Perm3> {
        let p = Perm3([
            images[0].wrapping_sub(1),
            images[1].wrapping_sub(1),
            images[2].wrapping_sub(1),
        ]);
        Perm3::ALL.contains(&p).then_some(p)
    }

    /// Image of the point `i` (1-based).
    pub fn apply(self, i: u8) -> u8 {
        self.0[(i - 1) as usize] + 1
    }

    pub fn images(self) -> [u8; 3] {
        [self.apply(1), self.apply(2), self.apply(3)]
    }

    pub fn index(self) -> usize {
        Perm3::ALL.iter().position(|&p| p == self).unwrap()
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        Perm3(inv)
    }

    pub fn is_even(self) -> bool {
        matches!(self, Perm3::ID | Perm3::C1 | Perm3::C2)
    }

    /// The sign character ε(σ) = ±1.
    pub fn sign(self) -> i64 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn name(self) -> &'static str {
        Perm3::NAMES[self.index()]
    }

    pub fn from_name(name: &str) -> Option<Perm3> {
        Perm3::NAMES
            .iter()
            .position(|&n| n == name)
            .map(|i| Perm3::ALL[i])
    }
}

impl Mul for Perm3 {
    type Output = Perm3;

    /// Left-to-right composition: `(s * r)(i) = r(s(i))`.
    fn mul(self, rhs: Perm3) -> Perm3 {
        Perm3([
            rhs.0[self.0[0] as usize],
            rhs.0[self.0[1] as usize],
            rhs.0[self.0[2] as usize],
        ])
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The six subgroups G₁..G₆ of Σ₃: {Id}, ⟨τ₁₂⟩, ⟨τ₂₃⟩, ⟨τ₁₃⟩, ⟨c₁⟩, Σ₃.
pub fn subgroup(i: usize) -> Option<Vec<Perm3>> {
    Some(match i {
        1 => vec![Perm3::ID],
        2 => vec![Perm3::ID, Perm3::T12],
        3 => vec![Perm3::ID, Perm3::T23],
        4 => vec![Perm3::ID, Perm3::T13],
        5 => vec![Perm3::ID, Perm3::C1, Perm3::C2],
        6 => Perm3::ALL.to_vec(),
        _ => return None,
    })
}

/// An element `Σ a_σ σ` of the group algebra K[Σ₃].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct GroupVector {
    coeffs: [Rational; 6],
}

impl GroupVector {
    pub fn zero() -> Self {
        GroupVector {
            coeffs: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn basis(g: Perm3) -> Self {
        let mut v = GroupVector::zero();
        v.coeffs[g.index()] = Rational::one();
        v
    }

    pub fn identity() -> Self {
        GroupVector::basis(Perm3::ID)
    }

    pub fn from_coeffs(coeffs: [Rational; 6]) -> Self {
        GroupVector { coeffs }
    }

    pub fn from_slice(coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != 6 {
            return Err(Error::DimensionMismatch {
                expected: 6,
                found: coeffs.len(),
            });
        }
        Ok(GroupVector {
            coeffs: std::array::from_fn(|i| coeffs[i].clone()),
        })
    }

    pub fn from_ints(coeffs: [i64; 6]) -> Self {
        GroupVector {
            coeffs: coeffs.map(rat),
        }
    }

    /// `Σ_{σ∈G} ε(σ)^k σ` over a set of permutations; `signed` selects ε.
    pub fn sum_over(elements: &[Perm3], signed: bool) -> Self {
        let mut v = GroupVector::zero();
        for &g in elements {
            let c = if signed { g.sign() } else { 1 };
            v.coeffs[g.index()] += rat(c);
        }
        v
    }

    /// V = Σ ε(σ)σ, spanning the sign representation.
    pub fn alternating() -> Self {
        GroupVector::sum_over(&Perm3::ALL, true)
    }

    /// W = Σ σ, spanning the trivial representation.
    pub fn symmetric() -> Self {
        GroupVector::sum_over(&Perm3::ALL, false)
    }

    pub fn coeff(&self, g: Perm3) -> &Rational {
        &self.coeffs[g.index()]
    }

    pub fn coeffs(&self) -> &[Rational; 6] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Elements with a nonzero coefficient, in enumeration order.
    pub fn support(&self) -> Vec<Perm3> {
        Perm3::ALL
            .into_iter()
            .filter(|g| !self.coeff(*g).is_zero())
            .collect()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        GroupVector {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] * s),
        }
    }

    /// Left translation `σ * v`, the action of Σ₃ on K[Σ₃].
    pub fn left_translate(&self, g: Perm3) -> Self {
        &GroupVector::basis(g) * self
    }

    /// Image of `Σ a_σ σ ↦ Σ a_σ σ⁻¹`.
    pub fn antipode(&self) -> Self {
        let mut v = GroupVector::zero();
        for g in Perm3::ALL {
            v.coeffs[g.inverse().index()] = self.coeff(g).clone();
        }
        v
    }

    /// Applies `v` as the operator `Σ a_σ act(σ, ·)` on a Σ₃-module.
    pub fn apply<A: Sigma3Action + ?Sized>(&self, action: &A, x: &[Rational]) -> Vec<Rational> {
        let mut out = zero_vec(x.len());
        for g in Perm3::ALL {
            let c = self.coeff(g);
            if !c.is_zero() {
                add_scaled(&mut out, c, &action.act(g, x));
            }
        }
        out
    }
}

impl<'a> Add for &'a GroupVector {
    type Output = GroupVector;
    fn add(self, rhs: &'a GroupVector) -> GroupVector {
        GroupVector {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }
}

impl<'a> Sub for &'a GroupVector {
    type Output = GroupVector;
    fn sub(self, rhs: &'a GroupVector) -> GroupVector {
        GroupVector {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }
}

impl Neg for &GroupVector {
    type Output = GroupVector;
    fn neg(self) -> GroupVector {
        GroupVector {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

impl<'a> Mul for &'a GroupVector {
    type Output = GroupVector;

    /// Convolution product of the group algebra.
    fn mul(self, rhs: &'a GroupVector) -> GroupVector {
        let mut out = GroupVector::zero();
        for g in Perm3::ALL {
            let a = self.coeff(g);
            if a.is_zero() {
                continue;
            }
            for h in Perm3::ALL {
                let b = rhs.coeff(h);
                if !b.is_zero() {
                    out.coeffs[(g * h).index()] += a * b;
                }
            }
        }
        out
    }
}

/// A finite-dimensional space carrying a left Σ₃ action.
pub trait Sigma3Action {
    fn ambient_dim(&self) -> usize;
    fn act(&self, g: Perm3, x: &[Rational]) -> Vec<Rational>;
}

/// K[Σ₃] acting on itself by left translation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupAlgebra;

impl Sigma3Action for GroupAlgebra {
    fn ambient_dim(&self) -> usize {
        6
    }

    fn act(&self, g: Perm3, x: &[Rational]) -> Vec<Rational> {
        let v = GroupVector::from_slice(x).expect("group algebra vectors have 6 coordinates");
        v.left_translate(g).coeffs.to_vec()
    }
}

/// Span of the Σ₃-orbits of `xs`: the smallest invariant subspace containing them.
pub fn orbit_span<A: Sigma3Action + ?Sized>(action: &A, xs: &[Vec<Rational>]) -> Result<Subspace> {
    let dim = action.ambient_dim();
    let mut images = Vec::with_capacity(xs.len() * 6);
    for x in xs {
        if x.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: x.len(),
            });
        }
        for g in Perm3::ALL {
            images.push(action.act(g, x));
        }
    }
    Subspace::span(images, dim)
}

/// Checks closure under the two generators τ₁₂ and c₁ of Σ₃.
pub fn is_invariant<A: Sigma3Action + ?Sized>(action: &A, s: &Subspace) -> Result<bool> {
    for b in s.basis() {
        for g in [Perm3::T12, Perm3::C1] {
            if !s.contains(&action.act(g, b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// F_v: span of the left translates of `v`.
pub fn group_orbit_span(v: &GroupVector) -> Subspace {
    orbit_span(&GroupAlgebra, &[v.coeffs.to_vec()]).expect("6-dimensional input")
}

/// The three central idempotents of K[Σ₃].
pub fn central_idempotents() -> [GroupVector; 3] {
    let sixth = ratio(1, 6);
    let triv = GroupVector::symmetric().scale(&sixth);
    let sgn = GroupVector::alternating().scale(&sixth);
    let std = &(&GroupVector::identity() - &triv) - &sgn;
    [triv, sgn, std]
}

/// Multiplicities of the trivial, sign and 2-dimensional standard
/// representations in a Σ₃-module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicProfile {
    pub m_triv: usize,
    pub m_sgn: usize,
    pub m_std: usize,
}

impl IsotypicProfile {
    pub fn dim(&self) -> usize {
        self.m_triv + self.m_sgn + 2 * self.m_std
    }

    /// Minimal number of generators as a K[Σ₃]-module. K[Σ₃] ≅ K ⊕ K ⊕ M₂(K),
    /// so one generator covers one trivial, one sign and two standard copies.
    pub fn min_generators(&self) -> usize {
        self.m_triv.max(self.m_sgn).max(self.m_std.div_ceil(2))
    }
}

impl fmt::Display for IsotypicProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m_triv, self.m_sgn, self.m_std)
    }
}

pub fn isotypic_multiplicities<A: Sigma3Action + ?Sized>(
    action: &A,
    s: &Subspace,
) -> Result<IsotypicProfile> {
    if s.ambient_dim() != action.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: action.ambient_dim(),
            found: s.ambient_dim(),
        });
    }
    if !is_invariant(action, s)? {
        return Err(Error::NotInvariant("isotypic decomposition".into()));
    }
    let [triv, sgn, std] = central_idempotents();
    let component = |e: &GroupVector| -> Result<usize> {
        let images: Vec<Vec<Rational>> = s.basis().iter().map(|b| e.apply(action, b)).collect();
        Ok(Subspace::span(images, s.ambient_dim())?.dim())
    };
    let std_dim = component(&std)?;
    debug_assert!(std_dim % 2 == 0);
    Ok(IsotypicProfile {
        m_triv: component(&triv)?,
        m_sgn: component(&sgn)?,
        m_std: std_dim / 2,
    })
}
