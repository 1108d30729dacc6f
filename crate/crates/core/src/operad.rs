//! Quadratic operads with one binary generating operation, described by
//! their Σ₃-invariant module of weight-3 relations.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{self, GroupVector, IsotypicProfile, Perm3};
use crate::linalg::{add_scaled, rat, zero_vec, Rational, Subspace};
use crate::weight::{presentation_vector, psi, decompose_lr, Monomial3, Side, SymmetryClass, Weight3Element};

/// A Σ₃-invariant subspace of Γ(E)(3).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationModule {
    symmetry: SymmetryClass,
    space: Subspace,
}

impl RelationModule {
    pub fn new(symmetry: SymmetryClass, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != symmetry.weight3_dim() {
            return Err(Error::DimensionMismatch {
                expected: symmetry.weight3_dim(),
                found: space.ambient_dim(),
            });
        }
        if !group::is_invariant(&symmetry, &space)? {
            return Err(Error::NotInvariant(format!("{symmetry} relation module")));
        }
        Ok(RelationModule { symmetry, space })
    }

    pub fn zero(symmetry: SymmetryClass) -> Self {
        RelationModule {
            symmetry,
            space: Subspace::zero(symmetry.weight3_dim()),
        }
    }

    pub fn full(symmetry: SymmetryClass) -> Self {
        RelationModule {
            symmetry,
            space: Subspace::full(symmetry.weight3_dim()),
        }
    }

    /// K(O(X₁, …, X_k)), the smallest invariant subspace containing every `X_i`.
    pub fn orbit_span(symmetry: SymmetryClass, xs: &[Weight3Element]) -> Result<Self> {
        let mut vecs = Vec::with_capacity(xs.len());
        for x in xs {
            if x.symmetry() != symmetry {
                return Err(Error::MixedSymmetry(symmetry, x.symmetry()));
            }
            vecs.push(x.coords().to_vec());
        }
        Ok(RelationModule {
            symmetry,
            space: group::orbit_span(&symmetry, &vecs)?,
        })
    }

    pub fn symmetry(&self) -> SymmetryClass {
        self.symmetry
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_elements(&self) -> Vec<Weight3Element> {
        self.space
            .basis()
            .iter()
            .map(|b| Weight3Element::from_coords(self.symmetry, b.clone()).unwrap())
            .collect()
    }

    pub fn contains(&self, x: &Weight3Element) -> Result<bool> {
        if x.symmetry() != self.symmetry {
            return Err(Error::MixedSymmetry(self.symmetry, x.symmetry()));
        }
        self.space.contains(x.coords())
    }

    pub fn contains_module(&self, other: &RelationModule) -> Result<bool> {
        if other.symmetry != self.symmetry {
            return Err(Error::MixedSymmetry(self.symmetry, other.symmetry));
        }
        self.space.contains_subspace(&other.space)
    }

    pub fn sum(&self, other: &RelationModule) -> Result<RelationModule> {
        if other.symmetry != self.symmetry {
            return Err(Error::MixedSymmetry(self.symmetry, other.symmetry));
        }
        Ok(RelationModule {
            symmetry: self.symmetry,
            space: self.space.sum(&other.space)?,
        })
    }

    pub fn isotypic(&self) -> IsotypicProfile {
        group::isotypic_multiplicities(&self.symmetry, &self.space)
            .expect("relation modules are invariant by construction")
    }

    /// Minimal number of orbit generators.
    pub fn rank(&self) -> usize {
        self.isotypic().min_generators()
    }
}

/// One relation `Ψ^L_v((x₁·x₂)·x₃) − Ψ^R_w(x₁·(x₂·x₃))` of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresentationPair {
    pub v: GroupVector,
    pub w: GroupVector,
}

impl PresentationPair {
    pub fn new(v: GroupVector, w: GroupVector) -> Self {
        PresentationPair { v, w }
    }

    pub fn of_relation(x: &Weight3Element) -> Result<Self> {
        let (v, w) = decompose_lr(x)?;
        Ok(PresentationPair { v, w })
    }

    /// The generator as a regular element.
    pub fn relation(&self) -> Weight3Element {
        presentation_vector(&self.v, &self.w)
    }

    /// The generator in the weight-3 space of `symmetry`.
    pub fn relation_in(&self, symmetry: SymmetryClass) -> Weight3Element {
        self.relation().project(symmetry).expect("regular input")
    }
}

impl fmt::Display for PresentationPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v = {}, w = {}", self.v, self.w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticOperad {
    name: Option<String>,
    relations: RelationModule,
    presentation: Option<Vec<PresentationPair>>,
}

impl QuadraticOperad {
    /// Validates that a supplied presentation generates `relations`.
    pub fn new(
        name: Option<String>,
        relations: RelationModule,
        presentation: Option<Vec<PresentationPair>>,
    ) -> Result<Self> {
        if let Some(pres) = &presentation {
            let gens: Vec<_> = pres.iter().map(|p| p.relation_in(relations.symmetry)).collect();
            let spanned = RelationModule::orbit_span(relations.symmetry, &gens)?;
            if spanned != relations {
                return Err(Error::BadPresentation(format!(
                    "spans dimension {} instead of {}",
                    spanned.dim(),
                    relations.dim()
                )));
            }
        }
        Ok(QuadraticOperad {
            name,
            relations,
            presentation,
        })
    }

    /// The operad whose relations are the orbit span of the given presentation.
    pub fn from_presentation(
        name: &str,
        symmetry: SymmetryClass,
        presentation: Vec<PresentationPair>,
    ) -> Result<Self> {
        let gens: Vec<_> = presentation.iter().map(|p| p.relation_in(symmetry)).collect();
        let relations = RelationModule::orbit_span(symmetry, &gens)?;
        Ok(QuadraticOperad {
            name: Some(name.to_string()),
            relations,
            presentation: Some(presentation),
        })
    }

    /// The operad generated by explicit relation vectors. For the regular
    /// class each generator doubles as a presentation pair.
    pub fn from_generators(
        name: &str,
        symmetry: SymmetryClass,
        generators: &[Weight3Element],
    ) -> Result<Self> {
        let relations = RelationModule::orbit_span(symmetry, generators)?;
        let presentation = if symmetry == SymmetryClass::Regular {
            Some(
                generators
                    .iter()
                    .filter(|g| !g.is_zero())
                    .map(PresentationPair::of_relation)
                    .collect::<Result<Vec<_>>>()?,
            )
        } else {
            None
        };
        Ok(QuadraticOperad {
            name: Some(name.to_string()),
            relations,
            presentation,
        })
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("<unnamed>")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn symmetry(&self) -> SymmetryClass {
        self.relations.symmetry
    }

    pub fn relations(&self) -> &RelationModule {
        &self.relations
    }

    pub fn presentation(&self) -> Option<&[PresentationPair]> {
        self.presentation.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.relations.rank()
    }
}

/// Same symmetry class and identical canonical relation subspaces.
pub fn operads_equal(p: &QuadraticOperad, q: &QuadraticOperad) -> bool {
    p.relations == q.relations
}

/// Weight of monomial `m` in the diagonal pairing on the regular space:
/// `ε(labels)` for `x_i·(x_j·x_k)`, `−ε(labels)` for `(x_i·x_j)·x_k`.
pub fn pairing_weight(m: Monomial3) -> i64 {
    match m.shape {
        crate::weight::Shape::Right => m.label_sign(),
        crate::weight::Shape::Left => -m.label_sign(),
    }
}

/// Koszul dual relation module.
///
/// In the regular class this is the orthogonal of `R` under the signed
/// diagonal pairing. A commutative and an anticommutative comb space are
/// paired by the plain dot product in the comb basis, which yields
/// `Lie! = Com`, `Com! = Lie` and `Γ(Sgn₂)! = ` the nilpotent commutative operad.
pub fn dual_module(r: &RelationModule) -> RelationModule {
    match r.symmetry {
        SymmetryClass::Regular => {
            let weighted: Vec<Vec<Rational>> = r
                .space
                .basis()
                .iter()
                .map(|b| {
                    b.iter()
                        .enumerate()
                        .map(|(i, x)| x * rat(pairing_weight(Monomial3::from_index(i))))
                        .collect()
                })
                .collect();
            let space = Subspace::span(weighted, 12)
                .expect("12-dimensional")
                .orthogonal_complement();
            RelationModule {
                symmetry: SymmetryClass::Regular,
                space,
            }
        }
        sym => {
            let other = match sym {
                SymmetryClass::Commutative => SymmetryClass::Anticommutative,
                _ => SymmetryClass::Commutative,
            };
            RelationModule {
                symmetry: other,
                space: r.space.orthogonal_complement(),
            }
        }
    }
}

pub fn dual(p: &QuadraticOperad) -> QuadraticOperad {
    QuadraticOperad {
        name: Some(format!("{}!", p.name())),
        relations: dual_module(&p.relations),
        presentation: None,
    }
}

/// Picks `rank` module generators by seeded random combinations of the basis
/// and returns their L/R decompositions.
pub fn find_presentation(p: &QuadraticOperad, seed: u64) -> Result<Vec<PresentationPair>> {
    if p.symmetry() != SymmetryClass::Regular {
        return Err(Error::MissingPresentation);
    }
    let r = &p.relations;
    let k = r.rank();
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = r.space.basis();
    for _ in 0..10_000 {
        let gens: Vec<Weight3Element> = (0..k)
            .map(|_| {
                let mut v = zero_vec(12);
                for b in basis {
                    let c = rat(rng.random_range(-3..=3));
                    add_scaled(&mut v, &c, b);
                }
                Weight3Element::from_coords(SymmetryClass::Regular, v).unwrap()
            })
            .collect();
        if &RelationModule::orbit_span(SymmetryClass::Regular, &gens)? == r {
            return gens.iter().map(PresentationPair::of_relation).collect();
        }
    }
    unreachable!("random elements generate a semisimple module with probability one")
}

/// Presentation used by [`tilde`]: the stored one, else [`find_presentation`].
pub fn presentation_for(p: &QuadraticOperad, seed: u64) -> Result<Vec<PresentationPair>> {
    match &p.presentation {
        Some(pres) => Ok(pres.clone()),
        None => find_presentation(p, seed),
    }
}

/// Output of the tilde construction with its provenance.
#[derive(Debug, Clone)]
pub struct TildeConstruction {
    pub presentation: Vec<PresentationPair>,
    /// Generating vectors of R̃ before taking orbits, in the output class.
    pub generators: Vec<Weight3Element>,
    pub operad: QuadraticOperad,
}

/// Regular generating vectors of R̃ for one presentation:
/// `Ψ^L_{σ_i − σ_j}` when `a_i a_j ≠ 0`, `Ψ^R_{σ_i − σ_j}` when `b_i b_j ≠ 0`,
/// and `Ψ^L_{σ_i} − Ψ^R_{σ_j}` when `a_i b_j ≠ 0`.
pub fn tilde_generators(presentation: &[PresentationPair]) -> Vec<Weight3Element> {
    let mut out: Vec<Weight3Element> = Vec::new();
    let mut push = |x: Weight3Element| {
        if !x.is_zero() && !out.contains(&x) {
            out.push(x);
        }
    };
    let diff = |g: Perm3, h: Perm3| &GroupVector::basis(g) - &GroupVector::basis(h);
    for pair in presentation {
        let a = pair.v.support();
        let b = pair.w.support();
        for (n, &gi) in a.iter().enumerate() {
            for &gj in &a[n + 1..] {
                push(psi(&diff(gi, gj), Side::L));
            }
        }
        for (n, &gi) in b.iter().enumerate() {
            for &gj in &b[n + 1..] {
                push(psi(&diff(gi, gj), Side::R));
            }
        }
        for &gi in &a {
            for &gj in &b {
                push(presentation_vector(&GroupVector::basis(gi), &GroupVector::basis(gj)));
            }
        }
    }
    out
}

/// The tilde operad built from an explicit presentation of `p`.
pub fn tilde_with(p: &QuadraticOperad, presentation: Vec<PresentationPair>) -> Result<TildeConstruction> {
    let target = match p.symmetry() {
        SymmetryClass::Regular => SymmetryClass::Regular,
        _ => SymmetryClass::Commutative,
    };
    let regular = tilde_generators(&presentation);
    let pres_out = regular
        .iter()
        .map(PresentationPair::of_relation)
        .collect::<Result<Vec<_>>>()?;
    let mut generators: Vec<Weight3Element> = Vec::new();
    for g in &regular {
        let x = g.project(target)?;
        if !x.is_zero() && !generators.contains(&x) {
            generators.push(x);
        }
    }
    let relations = RelationModule::orbit_span(target, &generators)?;
    let operad = QuadraticOperad {
        name: Some(format!("{}~", p.name())),
        relations,
        presentation: Some(pres_out),
    };
    Ok(TildeConstruction {
        presentation,
        generators,
        operad,
    })
}

pub fn tilde_detailed(p: &QuadraticOperad, seed: u64) -> Result<TildeConstruction> {
    let presentation = presentation_for(p, seed)?;
    tilde_with(p, presentation)
}

/// The operad P̃ of P, from the stored presentation or the seed-0 search.
pub fn tilde(p: &QuadraticOperad) -> Result<QuadraticOperad> {
    Ok(tilde_detailed(p, 0)?.operad)
}

/// All invariant submodules of a multiplicity-free Σ₃-module, as sums of
/// isotypic components. Returns `None` when some multiplicity exceeds one.
pub fn invariant_submodules(symmetry: SymmetryClass) -> Option<Vec<RelationModule>> {
    let full = Subspace::full(symmetry.weight3_dim());
    let profile = group::isotypic_multiplicities(&symmetry, &full).ok()?;
    if profile.m_triv > 1 || profile.m_sgn > 1 || profile.m_std > 1 {
        return None;
    }
    let mut components = Vec::new();
    for e in group::central_idempotents() {
        let images: Vec<_> = full.basis().iter().map(|b| e.apply(&symmetry, b)).collect();
        let c = Subspace::span(images, full.ambient_dim()).ok()?;
        if !c.is_zero() {
            components.push(c);
        }
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << components.len()) {
        let mut s = Subspace::zero(full.ambient_dim());
        for (i, c) in components.iter().enumerate() {
            if mask & (1 << i) != 0 {
                s = s.sum(c).ok()?;
            }
        }
        out.push(RelationModule { symmetry, space: s });
    }
    out.sort_by_key(|m| (m.dim(), m.space.basis().to_vec()));
    Some(out)
}

/// Presentation of a symmetric-class module through balanced lifts of its
/// basis (see [`Weight3Element::balanced_lift`]).
pub fn balanced_presentation(r: &RelationModule) -> Result<Vec<PresentationPair>> {
    r.basis_elements()
        .iter()
        .map(|b| PresentationPair::of_relation(&b.balanced_lift()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Monomial3;

    fn assoc_operad() -> QuadraticOperad {
        QuadraticOperad::from_generators(
            "ass",
            SymmetryClass::Regular,
            &[Weight3Element::associator([1, 2, 3])],
        )
        .unwrap()
    }

    #[test]
    fn associator_orbit_is_six_dimensional() {
        let p = assoc_operad();
        assert_eq!(p.relations().dim(), 6);
        assert_eq!(p.rank(), 1);
    }

    #[test]
    fn empty_orbit_span_is_zero_module() {
        let r = RelationModule::orbit_span(SymmetryClass::Regular, &[]).unwrap();
        assert_eq!(r, RelationModule::zero(SymmetryClass::Regular));
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn mixed_symmetry_rejected() {
        let a = Weight3Element::associator([1, 2, 3]);
        let b = Weight3Element::comb(SymmetryClass::Commutative, 0).unwrap();
        assert!(matches!(
            RelationModule::orbit_span(SymmetryClass::Regular, &[a, b]),
            Err(Error::MixedSymmetry(..))
        ));
    }

    #[test]
    fn non_invariant_module_rejected() {
        let s = Subspace::span([Weight3Element::associator([1, 2, 3]).into_coords()], 12).unwrap();
        assert!(RelationModule::new(SymmetryClass::Regular, s).is_err());
    }

    #[test]
    fn associative_operad_is_self_dual() {
        let p = assoc_operad();
        assert!(operads_equal(&p, &dual(&p)));
    }

    #[test]
    fn dual_is_involution_with_complementary_dimension() {
        let p = assoc_operad();
        let x = Weight3Element::monomial(Monomial3::left([1, 2, 3]));
        let q = QuadraticOperad::from_generators("q", SymmetryClass::Regular, &[x]).unwrap();
        for op in [p, q] {
            let d = dual(&op);
            assert_eq!(op.relations().dim() + d.relations().dim(), 12);
            assert!(operads_equal(&dual(&d), &op));
        }
    }

    #[test]
    fn find_presentation_of_zero_module_is_empty() {
        let p = QuadraticOperad::new(None, RelationModule::zero(SymmetryClass::Regular), None).unwrap();
        assert!(find_presentation(&p, 0).unwrap().is_empty());
    }

    #[test]
    fn found_presentation_generates_relations() {
        let p = dual(&assoc_operad());
        for seed in 0..3 {
            let pres = find_presentation(&p, seed).unwrap();
            assert_eq!(pres.len(), p.rank());
            QuadraticOperad::new(None, p.relations().clone(), Some(pres)).unwrap();
        }
    }

    #[test]
    fn symmetric_find_presentation_refused() {
        let r = RelationModule::full(SymmetryClass::Commutative);
        let p = QuadraticOperad::new(None, r, None).unwrap();
        assert!(matches!(find_presentation(&p, 0), Err(Error::MissingPresentation)));
        assert!(matches!(tilde(&p), Err(Error::MissingPresentation)));
    }

    #[test]
    fn bad_presentation_rejected() {
        let p = assoc_operad();
        let pres = vec![PresentationPair::new(GroupVector::identity(), GroupVector::zero())];
        assert!(matches!(
            QuadraticOperad::new(None, p.relations().clone(), Some(pres)),
            Err(Error::BadPresentation(_))
        ));
    }

    #[test]
    fn symmetric_classes_have_four_submodules() {
        for sym in [SymmetryClass::Commutative, SymmetryClass::Anticommutative] {
            let subs = invariant_submodules(sym).unwrap();
            let dims: Vec<_> = subs.iter().map(RelationModule::dim).collect();
            assert_eq!(dims, vec![0, 1, 2, 3]);
        }
        assert!(invariant_submodules(SymmetryClass::Regular).is_none());
    }
}
