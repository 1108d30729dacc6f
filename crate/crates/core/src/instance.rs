//! Finite-dimensional algebras given by structure constants.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::closure::MixedProduct;
use crate::dsl::format_element;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, parse_rational, rat, zero_vec, fmt_rational, Rational};
use crate::operad::{tilde, RelationModule};
use crate::weight::{Monomial3, Shape, SymmetryClass, Weight3Element};

/// `e_i · e_j = Σ_k c[i][j][k] e_k`, stored densely and 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraInstance {
    name: Option<String>,
    dim: usize,
    structure: Vec<Rational>,
}

/// A nonzero value of a relation on basis vectors (1-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: String,
    pub triple: [usize; 3],
    pub value: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.triple;
        write!(
            f,
            "{} at (e{a}, e{b}, e{c}) = [{}]",
            self.relation,
            self.value.join(", ")
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    structure: Vec<(usize, usize, usize, String)>,
}

impl AlgebraInstance {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInstance("dimension must be at least 1".into()));
        }
        Ok(AlgebraInstance {
            name: None,
            dim,
            structure: zero_vec(dim * dim * dim),
        })
    }

    /// Builds from 1-based entries `(i, j, k, c)`: `e_i·e_j` gains `c·e_k`.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut a = AlgebraInstance::zero(dim)?;
        for (i, j, k, c) in entries {
            for x in [i, j, k] {
                if *x == 0 || *x > dim {
                    return Err(Error::InvalidInstance(format!("index {x} outside 1..={dim}")));
                }
            }
            let at = a.at(i - 1, j - 1, k - 1);
            a.structure[at] += c;
        }
        Ok(a)
    }

    pub fn from_ints(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self> {
        let e: Vec<_> = entries.iter().map(|&(i, j, k, c)| (i, j, k, rat(c))).collect();
        AlgebraInstance::from_entries(dim, &e)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("<unnamed>")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    /// `c[i][j][k]`, 0-based.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[self.at(i, j, k)]
    }

    /// Nonzero constants as 1-based `(i, j, k, c)`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out.push((i + 1, j + 1, k + 1, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// The product of two coordinate vectors.
    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let d = self.dim;
        let mut out = zero_vec(d);
        for (i, xi) in x.iter().enumerate().take(d) {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate().take(d) {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// `e_a·e_b` for all pairs, sparse, indexed `a·dim + b`.
    fn product_table(&self) -> Vec<Vec<(usize, Rational)>> {
        let d = self.dim;
        (0..d * d)
            .map(|ab| {
                (0..d)
                    .filter_map(|k| {
                        let c = self.constant(ab / d, ab % d, k);
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect()
    }

    /// Values of all twelve regular monomials on `(e_a, e_b, e_c)`.
    fn monomial_values(&self, table: &[Vec<(usize, Rational)>], triple: [usize; 3]) -> Vec<Vec<Rational>> {
        let d = self.dim;
        Monomial3::all()
            .map(|m| {
                let [p, q, r] = m.labels.map(|l| triple[l as usize - 1]);
                let mut out = zero_vec(d);
                match m.shape {
                    Shape::Left => {
                        for (k, x) in &table[p * d + q] {
                            for (o, y) in &table[k * d + r] {
                                out[*o] += x * y;
                            }
                        }
                    }
                    Shape::Right => {
                        for (k, x) in &table[q * d + r] {
                            for (o, y) in &table[p * d + k] {
                                out[*o] += x * y;
                            }
                        }
                    }
                }
                out
            })
            .collect()
    }

    fn combine(&self, lifted: &Weight3Element, values: &[Vec<Rational>]) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (idx, c) in lifted.terms() {
            for (o, x) in out.iter_mut().zip(&values[idx]) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// Value of a relation on the basis triple `(e_a, e_b, e_c)`
    /// (0-based), with `x_1, x_2, x_3` bound in that order. Comb relations
    /// are evaluated through their regular lift.
    pub fn evaluate(&self, relation: &Weight3Element, triple: [usize; 3]) -> Vec<Rational> {
        let values = self.monomial_values(&self.product_table(), triple);
        self.combine(&relation.lift(), &values)
    }

    /// First pair `(i, j)` (1-based, `i ≤ j`) breaking commutativity or
    /// anticommutativity. Regular imposes nothing.
    pub fn symmetry_violation(&self, sym: SymmetryClass) -> Option<(usize, usize)> {
        let d = self.dim;
        let sign = match sym {
            SymmetryClass::Regular => return None,
            SymmetryClass::Commutative => Rational::one(),
            SymmetryClass::Anticommutative => -Rational::one(),
        };
        for i in 0..d {
            for j in i..d {
                for k in 0..d {
                    if *self.constant(i, j, k) != &sign * self.constant(j, i, k) {
                        return Some((i + 1, j + 1));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.symmetry_violation(SymmetryClass::Commutative).is_none()
    }

    /// Evaluates every basis relation of `r` on every ordered basis triple.
    pub fn check_relations(&self, r: &RelationModule) -> Result<Vec<Violation>> {
        self.check_elements(r.symmetry(), &r.basis_elements())
    }

    /// Same as [`check_relations`](Self::check_relations) for a list of
    /// relations in one class; symmetric classes check the product first.
    pub fn check_elements(&self, sym: SymmetryClass, relations: &[Weight3Element]) -> Result<Vec<Violation>> {
        if let Some((left, right)) = self.symmetry_violation(sym) {
            return Err(Error::NotSymmetricProduct {
                kind: sym.keyword(),
                left,
                right,
            });
        }
        let d = self.dim;
        let table = self.product_table();
        let lifted: Vec<(String, Weight3Element)> =
            relations.iter().map(|r| (format_element(r), r.lift())).collect();
        // per relation, triples in lexicographic order
        let per_triple: Vec<Vec<Option<Violation>>> = (0..d * d * d)
            .into_par_iter()
            .map(|t| {
                let triple = [t / (d * d), (t / d) % d, t % d];
                let values = self.monomial_values(&table, triple);
                let live: Vec<bool> = values.iter().map(|v| !is_zero_vec(v)).collect();
                lifted
                    .iter()
                    .map(|(label, rel)| {
                        if !rel.terms().any(|(i, _)| live[i]) {
                            return None;
                        }
                        let v = self.combine(rel, &values);
                        (!is_zero_vec(&v)).then(|| Violation {
                            relation: label.clone(),
                            triple: triple.map(|i| i + 1),
                            value: v.iter().map(fmt_rational).collect(),
                        })
                    })
                    .collect()
            })
            .collect();
        let mut found: Vec<Vec<Violation>> = vec![Vec::new(); lifted.len()];
        for row in per_triple {
            for (slot, v) in found.iter_mut().zip(row) {
                slot.extend(v);
            }
        }
        let out: Vec<Violation> = found.into_iter().flatten().collect();
        Ok(out)
    }

    /// The first violation in (relation, triple) order, or `None`. Regular
    /// evaluation only; no symmetry precheck.
    pub fn first_violation(&self, relations: &[Weight3Element]) -> Option<Violation> {
        let d = self.dim;
        let table = self.product_table();
        let lifted: Vec<Weight3Element> = relations.iter().map(Weight3Element::lift).collect();
        for (rel, orig) in lifted.iter().zip(relations) {
            for t in 0..d * d * d {
                let triple = [t / (d * d), (t / d) % d, t % d];
                let v = self.combine(rel, &self.monomial_values(&table, triple));
                if !is_zero_vec(&v) {
                    return Some(Violation {
                        relation: format_element(orig),
                        triple: triple.map(|i| i + 1),
                        value: v.iter().map(fmt_rational).collect(),
                    });
                }
            }
        }
        None
    }

    pub fn satisfies(&self, r: &RelationModule) -> bool {
        matches!(self.check_relations(r), Ok(v) if v.is_empty())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text)?;
        let mut entries = Vec::with_capacity(file.structure.len());
        for (i, j, k, c) in &file.structure {
            let c = parse_rational(c)
                .ok_or_else(|| Error::InvalidInstance(format!("bad rational `{c}`")))?;
            entries.push((*i, *j, *k, c));
        }
        let a = AlgebraInstance::from_entries(file.dim, &entries)?;
        Ok(match file.name {
            Some(n) => a.with_name(n),
            None => a,
        })
    }

    pub fn to_json(&self) -> String {
        let file = InstanceFile {
            name: self.name.clone(),
            dim: self.dim,
            structure: self
                .entries()
                .into_iter()
                .map(|(i, j, k, c)| (i, j, k, fmt_rational(&c)))
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("plain data serializes")
    }
}

impl fmt::Display for AlgebraInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name(), self.dim)?;
        let entries = self.entries();
        if entries.is_empty() {
            return writeln!(f, "  all products zero");
        }
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let terms: Vec<String> = (0..d)
                    .filter(|&k| !self.constant(i, j, k).is_zero())
                    .map(|k| {
                        let c = self.constant(i, j, k);
                        if c.is_one() {
                            format!("e{}", k + 1)
                        } else {
                            format!("{}*e{}", fmt_rational(c), k + 1)
                        }
                    })
                    .collect();
                if !terms.is_empty() {
                    writeln!(f, "  e{}e{} = {}", i + 1, j + 1, terms.join(" + "))?;
                }
            }
        }
        Ok(())
    }
}

/// `(e_i⊗f_p)(e_j⊗f_q) = Σ α_{st} (μ_A∘s)(e_i,e_j) ⊗ (μ_B∘t)(f_p,f_q)`,
/// with basis `e_i ⊗ f_p` at index `i·dim(B) + p`.
pub fn tensor_instance(a: &AlgebraInstance, b: &AlgebraInstance, product: &MixedProduct) -> AlgebraInstance {
    let (da, db) = (a.dim, b.dim);
    let d = da * db;
    let mut out = AlgebraInstance::zero(d).expect("positive dimension");
    for s in [false, true] {
        for t in [false, true] {
            let alpha = product.coeff(s, t);
            if alpha.is_zero() {
                continue;
            }
            for i in 0..da {
                for j in 0..da {
                    let (ia, ja) = if s { (j, i) } else { (i, j) };
                    for p in 0..db {
                        for q in 0..db {
                            let (pb, qb) = if t { (q, p) } else { (p, q) };
                            for k in 0..da {
                                let ca = a.constant(ia, ja, k);
                                if ca.is_zero() {
                                    continue;
                                }
                                for r in 0..db {
                                    let cb = b.constant(pb, qb, r);
                                    if cb.is_zero() {
                                        continue;
                                    }
                                    let at = out.at(i * db + p, j * db + q, k * db + r);
                                    out.structure[at] += alpha * ca * cb;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out.name = Some(format!("{} ⊗ {}", a.name(), b.name()));
    out
}

/// Names accepted by [`example`].
pub const EXAMPLE_NAMES: &[&str] = &[
    "leib_tilde_3d",
    "lie_2d",
    "heisenberg",
    "comm_assoc_2d",
    "assoc_2d",
    "leibniz_3d",
    "zinbiel_3d",
    "poisson_5d",
    "unit_1d",
    "abelian_2d",
];

/// The preset each fixture is validated against at construction.
pub fn example_operad(name: &str) -> Option<&'static str> {
    Some(match name {
        "leib_tilde_3d" => "leib~",
        "lie_2d" | "heisenberg" => "lie",
        "comm_assoc_2d" => "com",
        "assoc_2d" | "unit_1d" | "abelian_2d" => "ass",
        "leibniz_3d" => "leib",
        "zinbiel_3d" => "zinb",
        "poisson_5d" => "poiss",
        _ => return None,
    })
}

/// Module a fixture is validated against; `leib~` is the tilde of Leibniz.
pub fn fixture_relations(operad: &str) -> Result<RelationModule> {
    match operad.strip_suffix('~') {
        Some(base) => Ok(tilde(&catalog::preset(base)?)?.relations().clone()),
        None => Ok(catalog::preset(operad)?.relations().clone()),
    }
}

/// Poisson structure on `S(g)/S^{≥3}(g)` for `g = ⟨a, b⟩` with `[a,b] = b`,
/// basis `a, b, a², ab, b²`, written as the single product `x·y = x•y + {x,y}`.
fn poisson_5d() -> Result<AlgebraInstance> {
    let (a, b, aa, ab, bb) = (1, 2, 3, 4, 5);
    // commutative part
    let mut e: Vec<(usize, usize, usize, i64)> = vec![(a, a, aa, 1), (a, b, ab, 1), (b, a, ab, 1), (b, b, bb, 1)];
    // bracket: {a,b} = b, {a,ab} = ab, {a,b²} = 2b², {b,a²} = −2ab, {b,ab} = −b²
    let bracket = [(a, b, b, 1), (a, ab, ab, 1), (a, bb, bb, 2), (b, aa, ab, -2), (b, ab, bb, -1)];
    for (i, j, k, c) in bracket {
        e.push((i, j, k, c));
        e.push((j, i, k, -c));
    }
    AlgebraInstance::from_ints(5, &e)
}

/// A named fixture algebra, checked against its operad before returning.
pub fn example(name: &str) -> Result<AlgebraInstance> {
    let inst = match name {
        "leib_tilde_3d" => AlgebraInstance::from_ints(3, &[(1, 1, 2, 1), (1, 3, 2, 1), (3, 3, 2, 1)])?,
        "lie_2d" => AlgebraInstance::from_ints(2, &[(1, 2, 2, 1), (2, 1, 2, -1)])?,
        "heisenberg" => AlgebraInstance::from_ints(3, &[(1, 2, 3, 1), (2, 1, 3, -1)])?,
        "comm_assoc_2d" => AlgebraInstance::from_ints(2, &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1)])?,
        "assoc_2d" => AlgebraInstance::from_ints(2, &[(1, 1, 1, 1), (1, 2, 2, 1)])?,
        "leibniz_3d" => AlgebraInstance::from_ints(3, &[(1, 1, 2, 1), (2, 1, 3, 1)])?,
        "zinbiel_3d" => AlgebraInstance::from_ints(3, &[(1, 1, 2, 1), (1, 2, 3, 1), (2, 1, 3, 2)])?,
        "poisson_5d" => poisson_5d()?,
        "unit_1d" => AlgebraInstance::from_ints(1, &[(1, 1, 1, 1)])?,
        "abelian_2d" => AlgebraInstance::zero(2)?,
        other => return Err(Error::UnknownExample(other.to_string())),
    }
    .with_name(name);
    let operad = example_operad(name).expect("every fixture has an operad");
    let violations = inst.check_relations(&fixture_relations(operad)?)?;
    if let Some(v) = violations.first() {
        return Err(Error::InvalidInstance(format!("fixture {name} fails {operad}: {v}")));
    }
    Ok(inst)
}

/// A pair of factors whose tensor product breaks a target relation.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub a: AlgebraInstance,
    pub b: AlgebraInstance,
    pub violation: Violation,
}

/// Search settings; the defaults keep the run at desk scale.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub max_dim: usize,
    pub seed: u64,
    /// Random nilpotent candidates drawn per side.
    pub samples: usize,
    /// Candidates kept per side after filtering, in draw order.
    pub max_candidates: usize,
    pub product: MixedProduct,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_dim: 3,
            seed: 0,
            samples: 400,
            max_candidates: 32,
            product: MixedProduct::identity(),
        }
    }
}

/// Seeded structure constants supported on `k > max(i, j)`, so every
/// product of `dim` factors vanishes.
pub fn random_nilpotent(dim: usize, rng: &mut ChaCha8Rng) -> AlgebraInstance {
    let mut entries = Vec::new();
    for i in 1..=dim {
        for j in 1..=dim {
            for k in (i.max(j) + 1)..=dim {
                if rng.random_bool(0.5) {
                    let c: i64 = rng.random_range(-2..=2);
                    if c != 0 {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
    }
    AlgebraInstance::from_ints(dim, &entries).expect("indices in range")
}

fn candidates(r: &RelationModule, config: &SearchConfig, stream: u64) -> Vec<AlgebraInstance> {
    let mut out: Vec<AlgebraInstance> = EXAMPLE_NAMES
        .iter()
        .filter_map(|n| example(n).ok())
        .filter(|a| a.dim() <= config.max_dim && a.satisfies(r))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(stream);
    for n in 0..config.samples {
        if out.len() >= config.max_candidates {
            break;
        }
        let dim = 2 + n % config.max_dim.saturating_sub(1).max(1);
        let a = random_nilpotent(dim.min(config.max_dim), &mut rng);
        if a.entries().is_empty() || !a.satisfies(r) || out.contains(&a) {
            continue;
        }
        out.push(a.with_name(format!("nil{}_{}", dim, n)));
    }
    out
}

/// Looks for `A ⊨ R_A`, `B ⊨ R_B` with `A ⊗ B` violating a target. The
/// first failing pair in candidate order is returned, independent of the
/// number of worker threads. `None` only means the budget ran out.
pub fn search_counterexample(
    ra: &RelationModule,
    rb: &RelationModule,
    targets: &[Weight3Element],
    config: &SearchConfig,
) -> Result<Option<Counterexample>> {
    if targets.iter().all(Weight3Element::is_zero) {
        return Ok(None);
    }
    let regular: Vec<Weight3Element> = targets.iter().map(Weight3Element::lift).collect();
    let left = candidates(ra, config, 1);
    let right = candidates(rb, config, 2);
    let pairs: Vec<(usize, usize)> = (0..left.len())
        .flat_map(|i| (0..right.len()).map(move |j| (i, j)))
        .collect();
    let found = pairs.par_iter().find_map_first(|&(i, j)| {
        let t = tensor_instance(&left[i], &right[j], &config.product);
        t.first_violation(&regular).map(|violation| (i, j, violation))
    });
    Ok(found.map(|(i, j, violation)| Counterexample {
        a: left[i].clone(),
        b: right[j].clone(),
        violation,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::preset;

    #[test]
    fn fixtures_build() {
        for n in EXAMPLE_NAMES {
            example(n).unwrap_or_else(|e| panic!("{n}: {e}"));
        }
        assert!(matches!(example("nope"), Err(Error::UnknownExample(_))));
    }

    #[test]
    fn leib_tilde_example_is_noncommutative() {
        let a = example("leib_tilde_3d").unwrap();
        assert_eq!(a.symmetry_violation(SymmetryClass::Commutative), Some((1, 3)));
        let com = preset("com").unwrap();
        assert!(matches!(
            a.check_relations(com.relations()),
            Err(Error::NotSymmetricProduct { left: 1, right: 3, .. })
        ));
    }

    #[test]
    fn zero_module_has_no_violations() {
        let a = example("zinbiel_3d").unwrap();
        assert!(a.check_relations(&RelationModule::zero(SymmetryClass::Regular)).unwrap().is_empty());
    }

    #[test]
    fn unit_tensor_keeps_structure() {
        let a = example("assoc_2d").unwrap();
        let t = tensor_instance(&a, &example("unit_1d").unwrap(), &MixedProduct::identity());
        assert_eq!(t.entries(), a.entries());
    }

    #[test]
    fn json_round_trip() {
        let a = example("zinbiel_3d").unwrap();
        let back = AlgebraInstance::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
        assert!(AlgebraInstance::from_json(r#"{"dim": 2, "structure": [[1, 3, 1, "1"]]}"#).is_err());
        assert!(AlgebraInstance::from_json(r#"{"dim": 0, "structure": []}"#).is_err());
        let half = AlgebraInstance::from_json(r#"{"dim": 1, "structure": [[1, 1, 1, "1/2"]]}"#).unwrap();
        assert_eq!(half.constant(0, 0, 0), &crate::linalg::ratio(1, 2));
    }

    #[test]
    fn nilpotent_samples_are_nilpotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = random_nilpotent(3, &mut rng);
            for (i, j, k, _) in a.entries() {
                assert!(k > i.max(j));
            }
        }
    }

    #[test]
    fn empty_targets_find_nothing() {
        let ass = preset("ass").unwrap();
        let found = search_counterexample(
            ass.relations(),
            ass.relations(),
            &[Weight3Element::zero(SymmetryClass::Regular)],
            &SearchConfig::default(),
        )
        .unwrap();
        assert!(found.is_none());
    }
}
