//! Property checks shared by the proptest suite and the acceptance run.

#![allow(dead_code)]

use operad_forge::closure::{expand, MixedProduct};
use operad_forge::dsl::{format_element, parse_element, parse_group_vector};
use operad_forge::linalg::ratio;
use operad_forge::operad::dual_module;
use operad_forge::weight::{decompose_lr, presentation_vector};
use operad_forge::{GroupVector, Perm3, Rational, RelationModule, Subspace, SymmetryClass, Weight3Element};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub const CASES: u32 = 256;

pub fn config() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        ..Config::default()
    }
}

/// Deterministic runner so acceptance output is reproducible.
pub fn runner() -> TestRunner {
    TestRunner::new_with_rng(config(), proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => Just(ratio(0, 1)),
        6 => (-4i64..=4).prop_map(|n| ratio(n, 1)),
        2 => (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d)),
    ]
}

pub fn perm() -> impl Strategy<Value = Perm3> {
    (0usize..6).prop_map(|i| Perm3::ALL[i])
}

pub fn symmetry() -> impl Strategy<Value = SymmetryClass> {
    prop_oneof![
        Just(SymmetryClass::Regular),
        Just(SymmetryClass::Commutative),
        Just(SymmetryClass::Anticommutative),
    ]
}

pub fn element_in(sym: SymmetryClass) -> impl Strategy<Value = Weight3Element> {
    proptest::collection::vec(rational(), sym.weight3_dim())
        .prop_map(move |c| Weight3Element::from_coords(sym, c).unwrap())
}

pub fn regular_element() -> impl Strategy<Value = Weight3Element> {
    element_in(SymmetryClass::Regular)
}

pub fn any_element() -> impl Strategy<Value = Weight3Element> {
    symmetry().prop_flat_map(element_in)
}

pub fn group_vector() -> impl Strategy<Value = GroupVector> {
    proptest::collection::vec(rational(), 6).prop_map(|c| GroupVector::from_slice(&c).unwrap())
}

pub fn product() -> impl Strategy<Value = MixedProduct> {
    proptest::array::uniform4(rational()).prop_map(MixedProduct::new)
}

pub fn vectors(n: usize, len: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    proptest::collection::vec(proptest::collection::vec(rational(), len), 0..=n)
}

pub fn action_composes(g: Perm3, h: Perm3, x: &Weight3Element) -> bool {
    x.act(g * h) == x.act(h).act(g)
}

pub fn psi_round_trip(v: &GroupVector, w: &GroupVector) -> bool {
    decompose_lr(&presentation_vector(v, w)).unwrap() == (v.clone(), w.clone())
}

pub fn dual_involution(gens: &[Weight3Element], sym: SymmetryClass) -> bool {
    let r = RelationModule::orbit_span(sym, gens).unwrap();
    dual_module(&dual_module(&r)) == r
}

pub fn dimension_formula(a: &[Vec<Rational>], b: &[Vec<Rational>], len: usize) -> bool {
    let u = Subspace::span(a.to_vec(), len).unwrap();
    let w = Subspace::span(b.to_vec(), len).unwrap();
    let sum = u.sum(&w).unwrap();
    let cap = u.intersection(&w).unwrap();
    sum.dim() + cap.dim() == u.dim() + w.dim()
}

pub fn element_text_round_trip(x: &Weight3Element) -> bool {
    parse_element(&format_element(x), x.symmetry()).unwrap() == *x
}

pub fn group_vector_text_round_trip(v: &GroupVector) -> bool {
    parse_group_vector(&v.to_string()).unwrap() == *v
}

pub fn expand_linear(
    x: &Weight3Element,
    y: &Weight3Element,
    a: &Rational,
    b: &Rational,
    m: &MixedProduct,
    sa: SymmetryClass,
    sb: SymmetryClass,
) -> bool {
    let combo = &x.scale(a) + &y.scale(b);
    let lhs = expand(&combo, m, sa, sb).unwrap();
    let rhs = expand(x, m, sa, sb).unwrap().scale(a).add(&expand(y, m, sa, sb).unwrap().scale(b));
    lhs == rhs
}

pub fn expand_equivariant(x: &Weight3Element, g: Perm3, m: &MixedProduct, sa: SymmetryClass, sb: SymmetryClass) -> bool {
    expand(&x.act(g), m, sa, sb).unwrap() == expand(x, m, sa, sb).unwrap().act(g)
}

/// Runs every property for [`CASES`] cases; returns the failures.
pub fn run_all() -> Vec<String> {
    let mut failures = Vec::new();
    let mut check = |name: &str, r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(format!("{name}: {e}"));
        }
    };
    let mut run = runner();
    check(
        "action composition",
        run.run(&(perm(), perm(), any_element()), |(g, h, x)| {
            prop_assert!(action_composes(g, h, &x));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    check(
        "psi round trip",
        run.run(&(group_vector(), group_vector()), |(v, w)| {
            prop_assert!(psi_round_trip(&v, &w));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    check(
        "dual involution",
        run.run(&proptest::collection::vec(regular_element(), 0..3), |gens| {
            prop_assert!(dual_involution(&gens, SymmetryClass::Regular));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    check(
        "dimension formula",
        run.run(&(vectors(6, 12), vectors(6, 12)), |(a, b)| {
            prop_assert!(dimension_formula(&a, &b, 12));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    check(
        "element text round trip",
        run.run(&any_element(), |x| {
            prop_assert!(element_text_round_trip(&x));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    check(
        "group vector text round trip",
        run.run(&group_vector(), |v| {
            prop_assert!(group_vector_text_round_trip(&v));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    check(
        "expand linearity",
        run.run(
            &(regular_element(), regular_element(), rational(), rational(), product(), symmetry(), symmetry()),
            |(x, y, a, b, m, sa, sb)| {
                prop_assert!(expand_linear(&x, &y, &a, &b, &m, sa, sb));
                Ok(())
            },
        )
        .map_err(|e| e.to_string()),
    );
    check(
        "expand equivariance",
        run.run(&(regular_element(), perm(), product(), symmetry(), symmetry()), |(x, g, m, sa, sb)| {
            prop_assert!(expand_equivariant(&x, g, &m, sa, sb));
            Ok(())
        })
        .map_err(|e| e.to_string()),
    );
    failures
}
