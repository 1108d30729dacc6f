//! Acceptance run: one PASS/FAIL line per criterion. Criteria listed in
//! `KNOWN_RED` are expected to fail; the test asserts the failing set
//! equals it, so a fix or a regression both show up.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};

use operad_forge::catalog::{self, FAMILY_AB_SAMPLES, FAMILY_T_SAMPLES};
use operad_forge::closure::{self, MixedProduct};
use operad_forge::dsl::{parse_group_vector, parse_relation};
use operad_forge::group::group_orbit_span;
use operad_forge::instance::{example, example_operad, fixture_relations, tensor_instance, EXAMPLE_NAMES};
use operad_forge::linalg::{add_scaled, rat, zero_vec};
use operad_forge::operad::{dual, dual_module, operads_equal, tilde, QuadraticOperad};
use operad_forge::report::reference_tables;
use operad_forge::{Error, RelationModule, SymmetryClass, Weight3Element};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Twisted Poisson: the stated coefficients leave a {,}⊗{,} term.
const KNOWN_RED: &[usize] = &[9];

type Outcome = (bool, String);

fn all_presets() -> Vec<QuadraticOperad> {
    let mut ops = catalog::regular_presets();
    for n in ["lie", "com", "free_anticomm", "nilcom"] {
        ops.push(catalog::preset(n).unwrap());
    }
    ops
}

fn gi(i: usize) -> QuadraticOperad {
    catalog::gi_ass(i).unwrap()
}

fn c1_dual_tables() -> Outcome {
    let mut bad = Vec::new();
    for i in 1..=6 {
        for p in [catalog::gi_ass(i).unwrap(), catalog::gi_p3ass(i).unwrap()] {
            let tab = catalog::tabulated_dual(p.name()).unwrap();
            if !operads_equal(&dual(&p), &tab) {
                bad.push(p.name().to_string());
            }
        }
    }
    (bad.is_empty(), format!("12 tables, mismatches {bad:?}"))
}

fn random_element(r: &RelationModule, rng: &mut ChaCha8Rng) -> Weight3Element {
    let sym = r.symmetry();
    let mut v = zero_vec(sym.weight3_dim());
    for b in r.space().basis() {
        add_scaled(&mut v, &rat(rng.random_range(-3..=3)), b);
    }
    Weight3Element::from_coords(sym, v).unwrap()
}

/// Def-1 search: does some k-tuple generate R within `trials` draws?
fn generates_with(r: &RelationModule, k: usize, trials: usize, rng: &mut ChaCha8Rng) -> bool {
    (0..trials).any(|_| {
        let gens: Vec<_> = (0..k).map(|_| random_element(r, rng)).collect();
        &RelationModule::orbit_span(r.symmetry(), &gens).unwrap() == r
    })
}

fn c2_ranks() -> Outcome {
    let mut ok = (1..=6).all(|i| gi(i).rank() == 1);
    ok &= dual(&gi(1)).rank() == 1;
    ok &= (2..=6).all(|i| dual(&gi(i)).rank() == 2);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut disagree = Vec::new();
    let mut modules: Vec<(String, RelationModule)> = Vec::new();
    for p in all_presets() {
        modules.push((p.name().to_string(), p.relations().clone()));
        if p.symmetry() == SymmetryClass::Regular {
            modules.push((format!("{}!", p.name()), dual_module(p.relations())));
        }
    }
    for (name, r) in &modules {
        let k = r.rank();
        let enough = generates_with(r, k, 200, &mut rng);
        let fewer = k > 0 && generates_with(r, k - 1, 200, &mut rng);
        if !enough || fewer {
            disagree.push(name.clone());
        }
    }
    (
        ok && disagree.is_empty(),
        format!("table ranks {}, oracle over {} modules, disagreements {disagree:?}", if ok { "match" } else { "differ" }, modules.len()),
    )
}

fn c3_dimensions() -> Outcome {
    let full = RelationModule::full(SymmetryClass::Regular).dim();
    let r6 = gi(6).relations().dim();
    let v = parse_group_vector("2*Id - t12 - t13 - t23 + c1").unwrap();
    let orbit = group_orbit_span(&v).dim();
    let bad: Vec<String> = catalog::regular_presets()
        .iter()
        .filter(|p| p.relations().dim() + dual_module(p.relations()).dim() != 12)
        .map(|p| p.name().to_string())
        .collect();
    (
        full == 12 && r6 == 1 && orbit == 5 && bad.is_empty(),
        format!("dim Γ(3) = {full}, dim R6 = {r6}, orbit dim = {orbit}, complement failures {bad:?}"),
    )
}

fn c4_tilde() -> Outcome {
    let mut bad = Vec::new();
    let mut expect = |label: String, got: &RelationModule, want: &RelationModule| {
        if got != want {
            bad.push(label);
        }
    };
    for i in 1..=6 {
        let p = gi(i);
        expect(format!("g{i}ass"), tilde(&p).unwrap().relations(), &dual_module(p.relations()));
    }
    let comm3 = catalog::preset("comm3").unwrap();
    let t = |n: &str| tilde(&catalog::preset(n).unwrap()).unwrap();
    expect("lieadm".into(), t("lieadm").relations(), comm3.relations());
    expect("lie".into(), t("lie").relations(), catalog::preset("com").unwrap().relations());
    let leib_t = RelationModule::orbit_span(
        SymmetryClass::Regular,
        &[parse_relation("x*(y*z) - (x*y)*z").unwrap(), parse_relation("(x*y)*z - (x*z)*y").unwrap()],
    )
    .unwrap();
    expect("leib".into(), t("leib").relations(), &leib_t);
    let poiss_t = t("poiss");
    expect("poiss".into(), poiss_t.relations(), comm3.relations());
    let missing: Vec<&str> = [
        "(x1*x2)*x3 - (x1*x3)*x2",
        "(x1*x2)*x3 - (x2*x3)*x1",
        "(x1*x2)*x3 - (x2*x1)*x3",
        "(x1*x2)*x3 - (x3*x1)*x2",
        "(x1*x2)*x3 - x1*(x2*x3)",
    ]
    .into_iter()
    .filter(|g| !poiss_t.relations().contains(&parse_relation(g).unwrap()).unwrap())
    .collect();
    let lieadm_dual = dual_module(catalog::preset("lieadm").unwrap().relations());
    for &(a, b) in FAMILY_AB_SAMPLES {
        let p = catalog::family_ab(&rat(a), &rat(b)).unwrap();
        let want = match (a, b) {
            (3, 0) => dual_module(gi(2).relations()),
            (0, 3) => dual_module(gi(4).relations()),
            (0, 0) => dual_module(gi(3).relations()),
            _ => lieadm_dual.clone(),
        };
        expect(p.name().to_string(), tilde(&p).unwrap().relations(), &want);
    }
    for &s in FAMILY_T_SAMPLES {
        let p = catalog::family_t(&rat(s)).unwrap();
        expect(p.name().to_string(), tilde(&p).unwrap().relations(), &lieadm_dual);
    }
    (
        bad.is_empty() && missing.is_empty(),
        format!("mismatches {bad:?}, Poisson generators outside R~ {missing:?}"),
    )
}

fn c5_closure() -> Outcome {
    let mut bad = Vec::new();
    let ops = all_presets();
    let n = ops.len();
    for p in ops.into_iter().filter(|p| p.name() != "nilcom") {
        let t = tilde(&p).unwrap();
        if !closure::closes_with_tilde(&p, &t).unwrap().holds {
            bad.push(p.name().to_string());
        }
    }
    (bad.is_empty(), format!("{} presets, failures {bad:?}", n - 1))
}

fn c6_negative() -> Outcome {
    let out = closure::closure_holds(
        catalog::preset("leib").unwrap().relations(),
        catalog::preset("zinb").unwrap().relations(),
        &MixedProduct::identity(),
        &[catalog::leibniz_relation()],
    )
    .unwrap();
    let residuals = out.failing().flat_map(|c| &c.components).filter(|c| c.residual != "0").count();
    (!out.holds && residuals > 0, format!("closes {}, nonzero residuals {residuals}", out.holds))
}

fn c7_companion() -> Outcome {
    let mut bad = Vec::new();
    for p in catalog::regular_presets() {
        let comp = closure::minimal_companion(&p).unwrap();
        let inside = tilde(&p).unwrap().relations().contains_module(&comp).unwrap();
        let cp = QuadraticOperad::new(None, comp, None).unwrap();
        if !inside || !closure::closes_with_tilde(&p, &cp).unwrap().holds {
            bad.push(p.name().to_string());
        }
    }
    (bad.is_empty(), format!("failures {bad:?}"))
}

fn c8_bracket() -> Outcome {
    let bad: Vec<usize> = (1..=6)
        .filter(|&i| {
            let r = gi(i).relations().clone();
            let out = closure::bracket_is_lie(&r, &dual_module(&r)).unwrap();
            !(out.antisymmetric && out.holds())
        })
        .collect();
    (bad.is_empty(), format!("failing i {bad:?}"))
}

fn c9_twisted() -> Outcome {
    let out = closure::twisted_poisson_check().unwrap();
    let fixed = closure::twisted_poisson_with(&MixedProduct::poisson_tensor()).unwrap().holds;
    (
        out.holds,
        format!("(3,-1,-1,1) closes {}; (3,1,1,-1) closes {fixed}", out.holds),
    )
}

fn c10_instances() -> Outcome {
    let mut bad = Vec::new();
    let lt = example("leib_tilde_3d").unwrap();
    let leib_t = tilde(&catalog::preset("leib").unwrap()).unwrap();
    if !lt.check_relations(leib_t.relations()).unwrap().is_empty() {
        bad.push("leib_tilde_3d fails tilde(leib)".to_string());
    }
    match lt.check_relations(catalog::preset("com").unwrap().relations()) {
        Err(Error::NotSymmetricProduct { left: 1, right: 3, .. }) => {}
        other => bad.push(format!("commutativity check gave {other:?}")),
    }
    for n in EXAMPLE_NAMES {
        let r = fixture_relations(example_operad(n).unwrap()).unwrap();
        if !example(n).unwrap().check_relations(&r).unwrap().is_empty() {
            bad.push(format!("fixture {n}"));
        }
    }
    let fixtures: Vec<_> = EXAMPLE_NAMES.iter().map(|n| example(n).unwrap()).collect();
    let mut pairs = 0;
    let mut ops = catalog::regular_presets();
    ops.push(catalog::preset("lie").unwrap());
    ops.push(catalog::preset("com").unwrap());
    for p in &ops {
        let t = tilde(p).unwrap();
        if !closure::closes_with_tilde(p, &t).unwrap().holds {
            continue;
        }
        let lhs: Vec<_> = fixtures.iter().filter(|a| matches!(a.check_relations(p.relations()), Ok(v) if v.is_empty())).collect();
        let rhs: Vec<_> = fixtures.iter().filter(|b| matches!(b.check_relations(t.relations()), Ok(v) if v.is_empty())).collect();
        for a in &lhs {
            for b in &rhs {
                pairs += 1;
                let ab = tensor_instance(a, b, &MixedProduct::identity());
                if !matches!(ab.check_relations(p.relations()), Ok(v) if v.is_empty()) {
                    bad.push(format!("{} ⊗ {} for {}", a.name(), b.name(), p.name()));
                }
            }
        }
    }
    (bad.is_empty(), format!("{pairs} tensor pairs checked, failures {bad:?}"))
}

fn c11_properties() -> Outcome {
    let failures = common::run_all();
    (failures.is_empty(), format!("8 properties x {} cases, failures {failures:?}", common::CASES))
}

fn c12_reports() -> Outcome {
    let a = reference_tables(0).unwrap();
    let b = reference_tables(0).unwrap();
    let text = a.to_text();
    let golden = include_str!("golden/paper_tables.txt");
    let sweep = a.sections.iter().find(|s| s.label == "Lie-admissible table sweep").unwrap();
    let iff_col = sweep.columns.iter().position(|c| c == "iff holds").unwrap();
    let iff = sweep.rows.iter().all(|r| r[iff_col] == "yes");
    let sym = a.sections.iter().any(|s| s.label == "Symmetric-class submodules" && s.rows.len() == 8);
    let deterministic = text == b.to_text() && a.to_json() == b.to_json();
    (
        iff && sym && deterministic && text == golden,
        format!(
            "iff over {} entries {}, symmetric table {}, deterministic {deterministic}, golden match {}",
            sweep.rows.len(),
            iff,
            sym,
            text == golden
        ),
    )
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("dual tables", c1_dual_tables),
        ("ranks and the search oracle", c2_ranks),
        ("dimension facts", c3_dimensions),
        ("tilde results", c4_tilde),
        ("closure with the tilde operad", c5_closure),
        ("Leibniz ⊗ Zinbiel non-closure", c6_negative),
        ("minimal companion audit", c7_companion),
        ("commutator bracket", c8_bracket),
        ("twisted Poisson", c9_twisted),
        ("instance level", c10_instances),
        ("property suites", c11_properties),
        ("table sweep reports", c12_reports),
    ];
    let mut failing = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let (ok, detail) = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        });
        let known = if !ok && KNOWN_RED.contains(&n) { " (known red)" } else { "" };
        // straight to the handle so the lines survive output capture
        let line = format!("criterion {n:>2} {}: {name}{known}: {detail}\n", if ok { "PASS" } else { "FAIL" });
        std::io::stderr().write_all(line.as_bytes()).unwrap();
        if !ok {
            failing.push(n);
        }
    }
    assert_eq!(failing, KNOWN_RED, "failing criteria differ from the recorded known-red set");
}
