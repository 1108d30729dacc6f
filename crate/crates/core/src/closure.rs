//! Symbolic tensor-product closure.
//!
//! A product on `A ⊗ B` of the form `Σ α_{st} (μ_A∘s) ⊗ (μ_B∘t)` turns every
//! weight-3 monomial in the letters `X_i = x_i ⊗ y_i` into a combination of
//! pairs (A-monomial, B-monomial). A relation `r` then holds in every
//! `A ⊗ B` with `A ⊨ R_A` and `B ⊨ R_B` as soon as its expansion lies in
//! `R_A ⊗ Γ + Γ ⊗ R_B`, which [`closure_holds`] decides exactly.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog;
use crate::dsl::format_element;
use crate::error::{Error, Result};
use crate::group::Perm3;
use crate::linalg::{fmt_rational, is_zero_vec, rat, zero_vec, Rational, Subspace};
use crate::operad::{QuadraticOperad, RelationModule};
use crate::weight::{Monomial3, Shape, SymmetryClass, Weight3Element};

/// Coefficients `α_{st}` over `(s, t) ∈ Σ₂ × Σ₂`, in the order
/// `(e,e), (e,τ), (τ,e), (τ,τ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedProduct {
    coeffs: [Rational; 4],
}

impl MixedProduct {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        MixedProduct { coeffs }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        MixedProduct::new(c.map(rat))
    }

    /// `μ_A ⊗ μ_B`.
    pub fn identity() -> Self {
        MixedProduct::from_ints([1, 0, 0, 0])
    }

    /// `μ_A ⊗ μ_B − (μ_A∘τ) ⊗ (μ_B∘τ)`.
    pub fn bracket() -> Self {
        MixedProduct::from_ints([1, 0, 0, -1])
    }

    /// `3 μ_A⊗μ_B − μ_A⊗(μ_B∘τ) − (μ_A∘τ)⊗μ_B + (μ_A∘τ)⊗(μ_B∘τ)`.
    pub fn twisted_poisson() -> Self {
        MixedProduct::from_ints([3, -1, -1, 1])
    }

    /// `3 μ_A⊗μ_B + μ_A⊗(μ_B∘τ) + (μ_A∘τ)⊗μ_B − (μ_A∘τ)⊗(μ_B∘τ)`. On
    /// `μ = • + {,}` this is `4(•⊗• + •⊗{,} + {,}⊗•)`, the usual Poisson
    /// structure on a tensor product.
    pub fn poisson_tensor() -> Self {
        MixedProduct::from_ints([3, 1, 1, -1])
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    /// `α_{st}`, with `true` standing for the twist τ.
    pub fn coeff(&self, s: bool, t: bool) -> &Rational {
        &self.coeffs[(s as usize) * 2 + t as usize]
    }

    /// The product with its two arguments exchanged: `α'_{st} = α_{sτ,tτ}`.
    pub fn swapped(&self) -> Self {
        MixedProduct::new([
            self.coeffs[3].clone(),
            self.coeffs[2].clone(),
            self.coeffs[1].clone(),
            self.coeffs[0].clone(),
        ])
    }

    pub fn is_antisymmetric(&self) -> bool {
        let neg: [Rational; 4] = std::array::from_fn(|i| -self.coeffs[i].clone());
        self.swapped().coeffs == neg
    }

    /// Invariant under exchanging the arguments on both sides at once.
    pub fn is_symmetric(&self) -> bool {
        self.swapped() == *self
    }
}

/// An element of `Γ_A(3) ⊗ Γ_B(3)`, stored densely (at most 12 × 12).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement3 {
    sym_a: SymmetryClass,
    sym_b: SymmetryClass,
    coords: Vec<Rational>,
}

impl TensorElement3 {
    pub fn zero(sym_a: SymmetryClass, sym_b: SymmetryClass) -> Self {
        TensorElement3 {
            sym_a,
            sym_b,
            coords: zero_vec(sym_a.weight3_dim() * sym_b.weight3_dim()),
        }
    }

    pub fn symmetries(&self) -> (SymmetryClass, SymmetryClass) {
        (self.sym_a, self.sym_b)
    }

    fn dim_b(&self) -> usize {
        self.sym_b.weight3_dim()
    }

    pub fn get(&self, a: usize, b: usize) -> &Rational {
        &self.coords[a * self.dim_b() + b]
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: &Rational) {
        let db = self.dim_b();
        self.coords[a * db + b] += c;
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        let db = self.dim_b();
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / db, i % db, c))
    }

    /// The A-side vector paired with B-basis vector `b`.
    fn column(&self, b: usize) -> Vec<Rational> {
        (0..self.sym_a.weight3_dim()).map(|a| self.get(a, b).clone()).collect()
    }

    /// The B-side vector paired with A-basis vector `a`.
    fn row(&self, a: usize) -> Vec<Rational> {
        (0..self.dim_b()).map(|b| self.get(a, b).clone()).collect()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TensorElement3 {
            sym_a: self.sym_a,
            sym_b: self.sym_b,
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.symmetries(), other.symmetries());
        TensorElement3 {
            sym_a: self.sym_a,
            sym_b: self.sym_b,
            coords: self.coords.iter().zip(&other.coords).map(|(x, y)| x + y).collect(),
        }
    }

    /// The diagonal action `σ ⊗ σ`.
    pub fn act(&self, g: Perm3) -> Self {
        let mut out = TensorElement3::zero(self.sym_a, self.sym_b);
        let da = self.sym_a.weight3_dim();
        let db = self.dim_b();
        let images_a: Vec<Weight3Element> = (0..da).map(|a| basis(self.sym_a, a).act(g)).collect();
        let images_b: Vec<Weight3Element> = (0..db).map(|b| basis(self.sym_b, b).act(g)).collect();
        for (a, b, c) in self.terms() {
            for (a2, ca) in images_a[a].terms() {
                for (b2, cb) in images_b[b].terms() {
                    out.add_term(a2, b2, &(c * ca * cb));
                }
            }
        }
        out
    }

    /// Text list of terms, `coeff * A-monomial ⊗ B-monomial`.
    pub fn term_strings(&self) -> Vec<String> {
        self.terms()
            .map(|(a, b, c)| {
                format!(
                    "{} * {} ⊗ {}",
                    fmt_rational(c),
                    monomial_name(self.sym_a, a),
                    monomial_name(self.sym_b, b)
                )
            })
            .collect()
    }
}

fn basis(sym: SymmetryClass, i: usize) -> Weight3Element {
    let mut v = zero_vec(sym.weight3_dim());
    v[i] = Rational::one();
    Weight3Element::from_coords(sym, v).expect("basis vector length")
}

fn monomial_name(sym: SymmetryClass, i: usize) -> String {
    match sym {
        SymmetryClass::Regular => Monomial3::from_index(i).text(),
        _ => format!("m{}", i + 1),
    }
}

/// Applies the node decorations to one regular monomial: `inner` decides
/// whether the nested product swaps its arguments, `outer` the other node.
fn decorate(m: Monomial3, inner: bool, outer: bool) -> Monomial3 {
    let [a, b, c] = m.labels;
    match m.shape {
        Shape::Left => {
            let (p, q) = if inner { (b, a) } else { (a, b) };
            if outer {
                Monomial3::right([c, p, q])
            } else {
                Monomial3::left([p, q, c])
            }
        }
        Shape::Right => {
            let (p, q) = if inner { (c, b) } else { (b, c) };
            if outer {
                Monomial3::left([p, q, a])
            } else {
                Monomial3::right([a, p, q])
            }
        }
    }
}

/// Expands a regular relation template under a mixed product and projects
/// each side into its symmetry class.
pub fn expand(
    relation: &Weight3Element,
    product: &MixedProduct,
    sym_a: SymmetryClass,
    sym_b: SymmetryClass,
) -> Result<TensorElement3> {
    if relation.symmetry() != SymmetryClass::Regular {
        return Err(Error::UnsupportedSymmetry(relation.symmetry(), "expansion template"));
    }
    let mut regular = TensorElement3::zero(SymmetryClass::Regular, SymmetryClass::Regular);
    let options: Vec<(bool, bool, &Rational)> = [(false, false), (false, true), (true, false), (true, true)]
        .into_iter()
        .map(|(s, t)| (s, t, product.coeff(s, t)))
        .filter(|(_, _, c)| !c.is_zero())
        .collect();
    for (i, c) in relation.terms() {
        let m = Monomial3::from_index(i);
        for &(s1, t1, c1) in &options {
            for &(s2, t2, c2) in &options {
                let ma = decorate(m, s1, s2);
                let mb = decorate(m, t1, t2);
                regular.add_term(ma.index(), mb.index(), &(c * c1 * c2));
            }
        }
    }
    if sym_a == SymmetryClass::Regular && sym_b == SymmetryClass::Regular {
        return Ok(regular);
    }
    let mut out = TensorElement3::zero(sym_a, sym_b);
    for (a, b, c) in regular.terms() {
        let pa = basis(SymmetryClass::Regular, a).project(sym_a)?;
        let pb = basis(SymmetryClass::Regular, b).project(sym_b)?;
        for (a2, ca) in pa.terms() {
            for (b2, cb) in pb.terms() {
                out.add_term(a2, b2, &(c * ca * cb));
            }
        }
    }
    Ok(out)
}

/// One A-side coset direction and the B-side vector it carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub a_monomial: String,
    pub b_vector: String,
    /// What is left of `b_vector` modulo `R_B`; `"0"` when absorbed.
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetCertificate {
    pub target: String,
    pub holds: bool,
    pub expansion: Vec<String>,
    pub components: Vec<Component>,
}

/// Outcome of a closure check with one certificate per target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureOutcome {
    pub holds: bool,
    pub certificates: Vec<TargetCertificate>,
}

impl ClosureOutcome {
    pub fn failing(&self) -> impl Iterator<Item = &TargetCertificate> {
        self.certificates.iter().filter(|c| !c.holds)
    }
}

/// Normal form of `t` modulo `R_A ⊗ Γ_B`: each column is reduced by `R_A`,
/// so the result lives on the free (non-pivot) A-coordinates only.
fn reduce_a_side(t: &TensorElement3, ra: &Subspace) -> TensorElement3 {
    let mut out = TensorElement3::zero(t.sym_a, t.sym_b);
    for b in 0..t.dim_b() {
        let col = ra.reduce(&t.column(b)).expect("A-side length");
        for (a, c) in col.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(a, b, c);
            }
        }
    }
    out
}

fn element_text(sym: SymmetryClass, v: &[Rational]) -> String {
    format_element(&Weight3Element::from_coords(sym, v.to_vec()).expect("side length"))
}

/// Decides `expand(target) ∈ R_A ⊗ Γ + Γ ⊗ R_B` for each target.
///
/// Targets are regular templates, or elements of a symmetric class that
/// are lifted first. On failure the certificate lists each A-side coset
/// direction whose B-vector leaves a nonzero residual modulo `R_B`.
pub fn closure_holds(
    ra: &RelationModule,
    rb: &RelationModule,
    product: &MixedProduct,
    targets: &[Weight3Element],
) -> Result<ClosureOutcome> {
    let (sym_a, sym_b) = (ra.symmetry(), rb.symmetry());
    let mut certificates = Vec::with_capacity(targets.len());
    for target in targets {
        let template = target.lift();
        let t = expand(&template, product, sym_a, sym_b)?;
        let reduced = reduce_a_side(&t, ra.space());
        let mut components = Vec::new();
        let mut holds = true;
        for a in ra.space().free_columns() {
            let row = reduced.row(a);
            if is_zero_vec(&row) {
                continue;
            }
            let residual = rb.space().reduce(&row)?;
            if !is_zero_vec(&residual) {
                holds = false;
            }
            components.push(Component {
                a_monomial: monomial_name(sym_a, a),
                b_vector: element_text(sym_b, &row),
                residual: element_text(sym_b, &residual),
            });
        }
        certificates.push(TargetCertificate {
            target: format_element(target),
            holds,
            expansion: t.term_strings(),
            components,
        });
    }
    Ok(ClosureOutcome {
        holds: certificates.iter().all(|c| c.holds),
        certificates,
    })
}

/// Class of the companion side for `p`: regular stays regular, a symmetric
/// operation pairs with a commutative one.
pub fn companion_symmetry(sym: SymmetryClass) -> SymmetryClass {
    match sym {
        SymmetryClass::Regular => SymmetryClass::Regular,
        _ => SymmetryClass::Commutative,
    }
}

/// The least invariant `S` with `Δ(R_P) ⊆ R_P ⊗ Γ + Γ ⊗ S`.
pub fn minimal_companion(p: &QuadraticOperad) -> Result<RelationModule> {
    let r = p.relations();
    let sym_b = companion_symmetry(p.symmetry());
    let mut vectors = Vec::new();
    for basis_elem in r.basis_elements() {
        let t = expand(&basis_elem.lift(), &MixedProduct::identity(), r.symmetry(), sym_b)?;
        let reduced = reduce_a_side(&t, r.space());
        for a in r.space().free_columns() {
            let row = reduced.row(a);
            if !is_zero_vec(&row) {
                vectors.push(Weight3Element::from_coords(sym_b, row)?);
            }
        }
    }
    RelationModule::orbit_span(sym_b, &vectors)
}

/// Whether `R_P` closes under the componentwise product on
/// `P-algebra ⊗ tilde(P)-algebra`.
pub fn closes_with_tilde(p: &QuadraticOperad, tilde: &QuadraticOperad) -> Result<ClosureOutcome> {
    closure_holds(
        p.relations(),
        tilde.relations(),
        &MixedProduct::identity(),
        &p.relations().basis_elements(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketOutcome {
    pub antisymmetric: bool,
    pub jacobi: ClosureOutcome,
}

impl BracketOutcome {
    pub fn holds(&self) -> bool {
        self.antisymmetric && self.jacobi.holds
    }
}

/// Whether `[a⊗b, a'⊗b'] = aa'⊗bb' − a'a⊗b'b` is a Lie bracket on every
/// `A ⊗ B` with `A ⊨ R_A`, `B ⊨ R_B`. Antisymmetry is a coefficient
/// identity; the Jacobiator is expanded from the bracket itself.
pub fn bracket_is_lie(ra: &RelationModule, rb: &RelationModule) -> Result<BracketOutcome> {
    for r in [ra, rb] {
        if r.symmetry() != SymmetryClass::Regular {
            return Err(Error::UnsupportedSymmetry(r.symmetry(), "bracket check"));
        }
    }
    let beta = MixedProduct::bracket();
    let jacobi = closure_holds(ra, rb, &beta, &[catalog::jacobi_template()])?;
    Ok(BracketOutcome {
        antisymmetric: beta.is_antisymmetric(),
        jacobi,
    })
}

/// Whether the twisted product of two Poisson algebras (each written as one
/// product `x•y + {x,y}`) satisfies the Poisson identity. It does not: the
/// `{,}⊗{,}` term survives with coefficient 6. See
/// [`MixedProduct::poisson_tensor`] for a sign pattern that works.
pub fn twisted_poisson_check() -> Result<ClosureOutcome> {
    twisted_poisson_with(&MixedProduct::twisted_poisson())
}

/// Same check for an arbitrary mixed product (controls and variants).
pub fn twisted_poisson_with(product: &MixedProduct) -> Result<ClosureOutcome> {
    let poiss = catalog::preset("poiss")?;
    closure_holds(
        poiss.relations(),
        poiss.relations(),
        product,
        &[catalog::poisson_relation()],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;
    use crate::operad::tilde;

    fn mono(i: usize) -> Weight3Element {
        basis(SymmetryClass::Regular, i)
    }

    #[test]
    fn identity_expansion_is_diagonal() {
        let reg = SymmetryClass::Regular;
        for i in 0..12 {
            let t = expand(&mono(i), &MixedProduct::identity(), reg, reg).unwrap();
            let terms: Vec<_> = t.terms().collect();
            assert_eq!(terms, vec![(i, i, &Rational::one())]);
        }
    }

    #[test]
    fn associator_diagonal() {
        let reg = SymmetryClass::Regular;
        let a = Weight3Element::associator([1, 2, 3]);
        let t = expand(&a, &MixedProduct::identity(), reg, reg).unwrap();
        assert_eq!(t.term_strings(), vec!["1 * (x1*x2)*x3 ⊗ (x1*x2)*x3", "-1 * x1*(x2*x3) ⊗ x1*(x2*x3)"]);
    }

    #[test]
    fn bracket_expands_associator_into_eight_terms() {
        let reg = SymmetryClass::Regular;
        let a = Weight3Element::associator([1, 2, 3]);
        let t = expand(&a, &MixedProduct::bracket(), reg, reg).unwrap();
        assert_eq!(t.terms().count(), 8);
        assert!(t.terms().all(|(_, _, c)| *c == Rational::one() || *c == -Rational::one()));
    }

    #[test]
    fn twist_on_node_swaps_shape() {
        let m = Monomial3::left([1, 2, 3]);
        assert_eq!(decorate(m, false, true), Monomial3::right([3, 1, 2]));
        assert_eq!(decorate(m, true, false), Monomial3::left([2, 1, 3]));
        let r = Monomial3::right([1, 2, 3]);
        assert_eq!(decorate(r, true, true), Monomial3::left([3, 2, 1]));
    }

    #[test]
    fn full_and_zero_modules() {
        let reg = SymmetryClass::Regular;
        let targets = [Weight3Element::associator([1, 2, 3])];
        let full = RelationModule::full(reg);
        let zero = RelationModule::zero(reg);
        let out = closure_holds(&zero, &full, &MixedProduct::twisted_poisson(), &targets).unwrap();
        assert!(out.holds);
        let out = closure_holds(&zero, &zero, &MixedProduct::identity(), &targets).unwrap();
        assert!(!out.holds);
        assert!(out.certificates[0].components.iter().any(|c| c.residual != "0"));
    }

    #[test]
    fn lie_com_closure() {
        let lie = preset("lie").unwrap();
        let com = preset("com").unwrap();
        let jac = lie.relations().basis_elements();
        let out = closure_holds(lie.relations(), com.relations(), &MixedProduct::identity(), &jac).unwrap();
        assert!(out.holds);
    }

    #[test]
    fn leibniz_zinbiel_fails() {
        let leib = preset("leib").unwrap();
        let zinb = preset("zinb").unwrap();
        let out = closure_holds(
            leib.relations(),
            zinb.relations(),
            &MixedProduct::identity(),
            &[catalog::leibniz_relation()],
        )
        .unwrap();
        assert!(!out.holds);
    }

    #[test]
    fn companion_of_free_is_zero() {
        let free = preset("free").unwrap();
        assert!(minimal_companion(&free).unwrap().space().is_zero());
    }

    #[test]
    fn companion_of_ass() {
        let ass = preset("ass").unwrap();
        let s = minimal_companion(&ass).unwrap();
        assert!(ass.relations().contains_module(&s).unwrap());
        assert!(tilde(&ass).unwrap().relations().contains_module(&s).unwrap());
    }

    #[test]
    fn bracket_on_ass() {
        let ass = preset("ass").unwrap();
        let out = bracket_is_lie(ass.relations(), ass.relations()).unwrap();
        assert!(out.holds());
    }

    #[test]
    fn mixed_product_symmetries() {
        assert!(MixedProduct::bracket().is_antisymmetric());
        assert!(MixedProduct::from_ints([1, 0, 0, 1]).is_symmetric());
        assert!(!MixedProduct::identity().is_symmetric());
        assert_eq!(MixedProduct::twisted_poisson().swapped(), MixedProduct::from_ints([1, -1, -1, 3]));
    }

    #[test]
    fn twisted_poisson_signs() {
        let bad = twisted_poisson_check().unwrap();
        assert!(!bad.holds);
        assert!(bad.certificates.iter().any(|c| !c.holds));
        assert!(twisted_poisson_with(&MixedProduct::poisson_tensor()).unwrap().holds);
    }

}
