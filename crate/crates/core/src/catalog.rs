//! Named operads: the Gᵢ-associative and 3-power associative families,
//! Lie/Com, Leibniz/Zinbiel, Poisson, the Lie-admissible table entries, and
//! hand-entered dual tables.
//!
//! Names are case-sensitive. Parameterised presets use call syntax:
//! `family_ab(3,0)`, `family_t(1/2)`.

use crate::error::{Error, Result};
use crate::group::{self, GroupVector};
use crate::linalg::{parse_rational, rat, Rational};
use crate::operad::{PresentationPair, QuadraticOperad, RelationModule};
use crate::weight::{Monomial3, SymmetryClass, Weight3Element};

use num_traits::One;

/// Plain preset names accepted by [`preset`], in report order.
pub const PRESET_NAMES: &[&str] = &[
    "ass", "g1ass", "g2ass", "g3ass", "g4ass", "g5ass", "g6ass", "lieadm", "g1p3ass", "g2p3ass",
    "g3p3ass", "g4p3ass", "g5p3ass", "g6p3ass", "p3ass", "comm3", "leib", "zinb", "poiss",
    "table_row_5", "table_row_6", "lie", "com", "free", "free_anticomm", "nilcom",
];

/// Sample parameters for the two table families, as used in sweeps.
pub const FAMILY_AB_SAMPLES: &[(i64, i64)] = &[(2, 2), (1, 0), (5, -1), (3, 0), (0, 3), (0, 0)];
pub const FAMILY_T_SAMPLES: &[i64] = &[0, 2, -3];

/// The Regular presets every verification sweep runs over.
pub fn regular_presets() -> Vec<QuadraticOperad> {
    let mut out: Vec<QuadraticOperad> = PRESET_NAMES
        .iter()
        .map(|n| preset(n).expect("catalog names resolve"))
        .filter(|p| p.symmetry() == SymmetryClass::Regular)
        .collect();
    for &(a, b) in FAMILY_AB_SAMPLES {
        out.push(family_ab(&rat(a), &rat(b)).expect("sample avoids (1,1)"));
    }
    for &t in FAMILY_T_SAMPLES {
        out.push(family_t(&rat(t)).expect("sample avoids 1"));
    }
    out
}

fn assoc(labels: [u8; 3]) -> Weight3Element {
    Weight3Element::associator(labels)
}

fn left(labels: [u8; 3]) -> Weight3Element {
    Weight3Element::monomial(Monomial3::left(labels))
}

fn right(labels: [u8; 3]) -> Weight3Element {
    Weight3Element::monomial(Monomial3::right(labels))
}

fn combo(terms: &[(Rational, Weight3Element)]) -> Weight3Element {
    terms
        .iter()
        .fold(Weight3Element::zero(SymmetryClass::Regular), |acc, (c, x)| &acc + &x.scale(c))
}

fn int_combo(terms: &[(i64, Weight3Element)]) -> Weight3Element {
    let terms: Vec<_> = terms.iter().map(|(c, x)| (rat(*c), x.clone())).collect();
    combo(&terms)
}

const X: u8 = 1;
const Y: u8 = 2;
const Z: u8 = 3;

/// Gᵢ-Ass, presented by `(Vᵢ, Vᵢ)` with `Vᵢ = Σ_{σ∈Gᵢ} ε(σ)σ`.
pub fn gi_ass(i: usize) -> Result<QuadraticOperad> {
    let g = group::subgroup(i).ok_or_else(|| Error::UnknownPreset(format!("g{i}ass")))?;
    let v = GroupVector::sum_over(&g, true);
    QuadraticOperad::from_presentation(
        &format!("g{i}ass"),
        SymmetryClass::Regular,
        vec![PresentationPair::new(v.clone(), v)],
    )
}

/// Gᵢ-p³Ass, presented by `(Wᵢ, Wᵢ)` with `Wᵢ = Σ_{σ∈Gᵢ} σ`.
pub fn gi_p3ass(i: usize) -> Result<QuadraticOperad> {
    let g = group::subgroup(i).ok_or_else(|| Error::UnknownPreset(format!("g{i}p3ass")))?;
    let w = GroupVector::sum_over(&g, false);
    QuadraticOperad::from_presentation(
        &format!("g{i}p3ass"),
        SymmetryClass::Regular,
        vec![PresentationPair::new(w.clone(), w)],
    )
}

/// `αA(x,y,z) − αA(y,x,z) + (α+β−3)A(z,y,x) − βA(x,z,y) + βA(y,z,x) + (3−α−β)A(z,x,y)`.
pub fn family_ab(alpha: &Rational, beta: &Rational) -> Result<QuadraticOperad> {
    if alpha.is_one() && beta.is_one() {
        return Err(Error::InvalidParameter(
            "family_ab excludes (α, β) = (1, 1), where the relation vanishes".into(),
        ));
    }
    let three = rat(3);
    let r = combo(&[
        (alpha.clone(), assoc([X, Y, Z])),
        (-alpha.clone(), assoc([Y, X, Z])),
        (alpha + beta - &three, assoc([Z, Y, X])),
        (-beta.clone(), assoc([X, Z, Y])),
        (beta.clone(), assoc([Y, Z, X])),
        (&three - alpha - beta, assoc([Z, X, Y])),
    ]);
    let name = format!("family_ab({},{})", fmt_param(alpha), fmt_param(beta));
    QuadraticOperad::from_generators(&name, SymmetryClass::Regular, &[r])
}

/// `A(x,y,z) + (1+t)A(y,x,z) + A(z,y,x) + A(y,z,x) + (1−t)A(z,x,y)`.
pub fn family_t(t: &Rational) -> Result<QuadraticOperad> {
    if t.is_one() {
        return Err(Error::InvalidParameter("family_t excludes t = 1".into()));
    }
    let one = Rational::one();
    let r = combo(&[
        (one.clone(), assoc([X, Y, Z])),
        (&one + t, assoc([Y, X, Z])),
        (one.clone(), assoc([Z, Y, X])),
        (one.clone(), assoc([Y, Z, X])),
        (&one - t, assoc([Z, X, Y])),
    ]);
    let name = format!("family_t({})", fmt_param(t));
    QuadraticOperad::from_generators(&name, SymmetryClass::Regular, &[r])
}

fn fmt_param(r: &Rational) -> String {
    crate::linalg::fmt_rational(r)
}

/// The Leibniz relation `x(yz) − (xy)z + (xz)y`.
pub fn leibniz_relation() -> Weight3Element {
    int_combo(&[(1, right([X, Y, Z])), (-1, left([X, Y, Z])), (1, left([X, Z, Y]))])
}

/// The Zinbiel relation `(xy)z − x(yz) − x(zy)`.
pub fn zinbiel_relation() -> Weight3Element {
    int_combo(&[(1, left([X, Y, Z])), (-1, right([X, Y, Z])), (-1, right([X, Z, Y]))])
}

/// `3A(x,y,z) − (xz)y − (yz)x + (yx)z + (zx)y`, the one-product Poisson identity.
pub fn poisson_relation() -> Weight3Element {
    int_combo(&[
        (3, assoc([X, Y, Z])),
        (-1, left([X, Z, Y])),
        (-1, left([Y, Z, X])),
        (1, left([Y, X, Z])),
        (1, left([Z, X, Y])),
    ])
}

/// The regular Jacobi template `(x₁x₂)x₃ + (x₂x₃)x₁ + (x₃x₁)x₂`.
pub fn jacobi_template() -> Weight3Element {
    int_combo(&[(1, left([1, 2, 3])), (1, left([2, 3, 1])), (1, left([3, 1, 2]))])
}

/// Associative with fully symmetric triple products: `(x_i·x_j)·x_k` is
/// invariant under both adjacent transpositions of the labels. The two
/// listed families alone would only give the `τ₁₂` half (dimension 9); the
/// full symmetry requirement gives dimension 11.
fn comm3() -> Result<QuadraticOperad> {
    let l = left([1, 2, 3]);
    QuadraticOperad::from_generators(
        "comm3",
        SymmetryClass::Regular,
        &[assoc([1, 2, 3]), &l - &left([2, 1, 3]), &l - &left([1, 3, 2])],
    )
}

fn lie() -> Result<QuadraticOperad> {
    let v = GroupVector::sum_over(&group::subgroup(5).expect("G5"), false);
    QuadraticOperad::from_presentation(
        "lie",
        SymmetryClass::Anticommutative,
        vec![PresentationPair::new(v.clone(), v)],
    )
}

fn com() -> Result<QuadraticOperad> {
    QuadraticOperad::from_presentation(
        "com",
        SymmetryClass::Commutative,
        vec![PresentationPair::new(GroupVector::identity(), GroupVector::identity())],
    )
}

fn table_row(name: &str, coeffs: &[(i64, [u8; 3])]) -> Result<QuadraticOperad> {
    let terms: Vec<_> = coeffs.iter().map(|&(c, l)| (c, assoc(l))).collect();
    QuadraticOperad::from_generators(name, SymmetryClass::Regular, &[int_combo(&terms)])
}

/// Resolves a preset name, including `family_ab(α,β)` and `family_t(t)`.
pub fn preset(name: &str) -> Result<QuadraticOperad> {
    let name = name.trim();
    if let Some(args) = call_args(name, "family_ab") {
        let [a, b] = args.as_slice() else {
            return Err(Error::InvalidParameter("family_ab takes two parameters".into()));
        };
        return family_ab(a, b);
    }
    if let Some(args) = call_args(name, "family_t") {
        let [t] = args.as_slice() else {
            return Err(Error::InvalidParameter("family_t takes one parameter".into()));
        };
        return family_t(t);
    }
    if let Some(base) = name.strip_suffix("_dual") {
        return tabulated_dual(base).ok_or_else(|| Error::UnknownPreset(name.to_string()));
    }
    let regular = SymmetryClass::Regular;
    let op = match name {
        "ass" => gi_ass(1)?.with_name("ass"),
        "lieadm" => gi_ass(6)?.with_name("lieadm"),
        "p3ass" => gi_p3ass(6)?.with_name("p3ass"),
        "comm3" => comm3()?,
        "leib" => QuadraticOperad::from_generators("leib", regular, &[leibniz_relation()])?,
        "zinb" => QuadraticOperad::from_generators("zinb", regular, &[zinbiel_relation()])?,
        "poiss" => QuadraticOperad::from_generators("poiss", regular, &[poisson_relation()])?,
        "table_row_5" => table_row(
            "table_row_5",
            &[(2, [X, Y, Z]), (1, [Y, X, Z]), (1, [X, Z, Y]), (1, [Y, Z, X]), (1, [Z, X, Y])],
        )?,
        "table_row_6" => table_row(
            "table_row_6",
            &[(2, [X, Y, Z]), (-1, [Y, X, Z]), (-1, [Z, Y, X]), (-1, [X, Z, Y]), (1, [Y, Z, X])],
        )?,
        "lie" => lie()?,
        "com" => com()?,
        "free" => QuadraticOperad::from_presentation("free", regular, Vec::new())?,
        "free_anticomm" => {
            QuadraticOperad::from_presentation("free_anticomm", SymmetryClass::Anticommutative, Vec::new())?
        }
        "nilcom" => QuadraticOperad::new(
            Some("nilcom".into()),
            RelationModule::full(SymmetryClass::Commutative),
            None,
        )?,
        other => {
            let gi = other
                .strip_prefix('g')
                .and_then(|rest| {
                    let digits = rest.find(|c: char| !c.is_ascii_digit())?;
                    Some((rest[..digits].parse::<usize>().ok()?, &rest[digits..]))
                });
            match gi {
                Some((i @ 1..=6, "ass")) => gi_ass(i)?,
                Some((i @ 1..=6, "p3ass")) => gi_p3ass(i)?,
                _ => return Err(Error::UnknownPreset(other.to_string())),
            }
        }
    };
    Ok(op)
}

fn call_args(name: &str, func: &str) -> Option<Vec<Rational>> {
    let inner = name.strip_prefix(func)?.trim().strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(parse_rational).collect()
}

fn orbit(name: &str, gens: &[Weight3Element]) -> QuadraticOperad {
    let relations = RelationModule::orbit_span(SymmetryClass::Regular, gens).expect("regular generators");
    QuadraticOperad::new(Some(name.to_string()), relations, None).expect("no presentation to check")
}

/// The tabulated dual, entered by hand: the orbit
/// span of the listed generators. Defined for `g1ass..g6ass`,
/// `g1p3ass..g6p3ass`, `ass`, `lieadm`, `p3ass`, `lie` and `com`.
pub fn tabulated_dual(name: &str) -> Option<QuadraticOperad> {
    let a = assoc([1, 2, 3]);
    let l123 = left([1, 2, 3]);
    let swap12 = |s: i64| &l123 + &left([2, 1, 3]).scale(&rat(s));
    let swap23 = |s: i64| &l123 + &left([1, 3, 2]).scale(&rat(s));
    let swap13 = |s: i64| &l123 + &left([3, 2, 1]).scale(&rat(s));
    let cyc = &l123 - &left([2, 3, 1]);
    let dual_name = format!("{name}_dual");
    let op = match name {
        "ass" | "g1ass" | "g1p3ass" => orbit(&dual_name, &[a]),
        "g2ass" => orbit(&dual_name, &[a, swap12(-1)]),
        "g3ass" => orbit(&dual_name, &[a, swap23(-1)]),
        "g4ass" => orbit(&dual_name, &[a, swap13(-1)]),
        "g5ass" | "g5p3ass" => orbit(&dual_name, &[a, cyc]),
        "g6ass" | "lieadm" => orbit(&dual_name, &[a, swap12(-1), swap23(-1)]),
        "g2p3ass" => orbit(&dual_name, &[a, swap12(1)]),
        "g3p3ass" => orbit(&dual_name, &[a, swap23(1)]),
        "g4p3ass" => orbit(&dual_name, &[a, swap13(1)]),
        "g6p3ass" | "p3ass" => orbit(&dual_name, &[a, swap12(1), swap23(1)]),
        "lie" => com().ok()?.with_name(dual_name),
        "com" => lie().ok()?.with_name(dual_name),
        _ => return None,
    };
    Some(op)
}

/// The dual tabulated beside each Lie-admissible table entry: associativity
/// plus one extra relation among associative triple products `x·y·z`.
pub fn table_dual(p: &QuadraticOperad) -> Option<QuadraticOperad> {
    // triple product t(a,b,c) = (a·b)·c once associativity holds
    let t = |l: [u8; 3]| left(l);
    let a = assoc([1, 2, 3]);
    let extra = match p.name() {
        "table_row_5" => int_combo(&[
            (1, t([X, Y, Z])),
            (1, t([Y, X, Z])),
            (-1, t([Z, Y, X])),
            (-1, t([Z, X, Y])),
        ]),
        "table_row_6" => int_combo(&[
            (1, t([X, Y, Z])),
            (-1, t([Y, X, Z])),
            (-1, t([Z, Y, X])),
            (-1, t([X, Z, Y])),
            (1, t([Y, Z, X])),
            (1, t([Z, X, Y])),
        ]),
        name => {
            if let Some(args) = call_args(name, "family_ab") {
                let (al, be) = (&args[0], &args[1]);
                let c1 = al - be;
                let c2 = al + be * rat(2) - rat(3);
                combo(&[
                    (c1.clone(), t([X, Y, Z])),
                    (-c1, t([Y, X, Z])),
                    (c2.clone(), t([Z, Y, X])),
                    (-c2, t([Z, X, Y])),
                ])
            } else {
                let args = call_args(name, "family_t")?;
                let tt = &args[0];
                let one = Rational::one();
                let two = rat(2);
                combo(&[
                    (tt - &one, t([X, Y, Z])),
                    (&one - tt, t([Y, X, Z])),
                    (-(tt + &two), t([Z, Y, X])),
                    (&one + &two * tt, t([X, Z, Y])),
                    (-(&one + &two * tt), t([Y, Z, X])),
                    (tt + &two, t([Z, X, Y])),
                ])
            }
        }
    };
    let gens: Vec<Weight3Element> = if extra.is_zero() { vec![a] } else { vec![a, extra] };
    Some(orbit(&format!("{}_table_dual", p.name()), &gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_group_vector;
    use crate::operad::{dual, operads_equal};
    use crate::weight::decompose_lr;

    #[test]
    fn all_names_resolve() {
        for name in PRESET_NAMES {
            let p = preset(name).unwrap();
            assert_eq!(p.name(), *name);
        }
        assert!(matches!(preset("g7ass"), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("nope"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn parameter_side_conditions() {
        assert!(matches!(preset("family_ab(1,1)"), Err(Error::InvalidParameter(_))));
        assert!(matches!(preset("family_t(1)"), Err(Error::InvalidParameter(_))));
        assert!(preset("family_ab(1/2, -3)").is_ok());
        assert!(preset("family_t(2,3)").is_err());
    }

    #[test]
    fn family_special_values() {
        let g2 = preset("g2ass").unwrap();
        assert!(operads_equal(&preset("family_ab(3,0)").unwrap(), &g2));
        assert!(operads_equal(&preset("family_ab(0,3)").unwrap(), &preset("g4ass").unwrap()));
        assert!(operads_equal(&preset("family_ab(0,0)").unwrap(), &preset("g3ass").unwrap()));
    }

    #[test]
    fn lieadm_is_rank_one_line() {
        let p = preset("lieadm").unwrap();
        assert_eq!(p.relations().dim(), 1);
        assert_eq!(p.rank(), 1);
    }

    #[test]
    fn p3ass_presentation_is_w() {
        let p = preset("p3ass").unwrap();
        let pres = p.presentation().unwrap();
        assert_eq!(pres.len(), 1);
        assert_eq!(pres[0].v, GroupVector::symmetric());
        assert_eq!(pres[0].w, GroupVector::symmetric());
    }

    #[test]
    fn poisson_presentation() {
        let (v, w) = decompose_lr(&poisson_relation()).unwrap();
        // the tabulated v₁ names the cycles by σ rather than σ⁻¹
        assert_eq!(v.antipode(), parse_group_vector("3*Id - t23 - c1 + t12 + c2").unwrap());
        assert_eq!(w, parse_group_vector("3*Id").unwrap());
    }

    #[test]
    fn symmetric_duals() {
        let lie = preset("lie").unwrap();
        let com = preset("com").unwrap();
        assert!(operads_equal(&dual(&lie), &com));
        assert!(operads_equal(&dual(&com), &lie));
        let free = preset("free_anticomm").unwrap();
        assert!(operads_equal(&dual(&free), &preset("nilcom").unwrap()));
        assert!(!operads_equal(&lie, &com));
    }

    #[test]
    fn table_duals_match_computed_duals() {
        let mut samples = vec![preset("table_row_5").unwrap(), preset("table_row_6").unwrap()];
        for &(a, b) in FAMILY_AB_SAMPLES {
            samples.push(family_ab(&rat(a), &rat(b)).unwrap());
        }
        for p in samples {
            let expected = table_dual(&p).unwrap();
            assert!(operads_equal(&dual(&p), &expected), "{}", p.name());
        }
    }

    #[test]
    fn t_family_rows_disagree() {
        // The tabulated t-family relation has coefficient sum 5, so its orbit
        // is all of R₁ and the dual is Ass; the tabulated dual line spans 8.
        for &t in FAMILY_T_SAMPLES {
            let p = family_t(&rat(t)).unwrap();
            assert_eq!(p.relations().dim(), 6);
            assert!(operads_equal(&dual(&p), &preset("ass").unwrap()));
            assert_eq!(table_dual(&p).unwrap().relations().dim(), 8);
        }
    }
}
