use num_bigint::BigInt;
use qthpower::closure::ClosurePresentation;
use qthpower::lifting::{
    compatibility_check, mod_n, rat_recon, is_prime_usable, run_algorithm1, verify_candidate, LiftConfig, LiftState, PrimeRun,
    PrimeSchedule, SkipReason, Usability,
};
use qthpower::polycore::{Extension, Rationals, WeightMatrix};

const QUADRATIC: &str = "y1^2 + 13/22*x1^9 + 13/22*x1^7 + 13/22*x1^5";
const WEIGHTED_CUBIC: &str = "y^3 + x^7 + 8*y*x";
const GENERIC_CUBIC: &str = "y^3 + 1/3*y*x + 8/7*x^5";
const CUSP: &str = "y^2 - 3/2*x^3 + 24/7*x^2 - 96/49*x";

fn ext(indep: &str, dep: &str, w: [u64; 2], rel: &str) -> Extension<Rationals> {
    Extension::new(Rationals, &[indep], dep, WeightMatrix::new(vec![w.to_vec()]).unwrap(), rel).unwrap()
}

fn pinned(primes: &[u64]) -> LiftConfig {
    LiftConfig {
        primes: PrimeSchedule::Explicit(primes.to_vec()),
        max_primes: primes.len(),
        ..LiftConfig::default()
    }
}

#[test]
fn cusp_with_three_primes() {
    let e = ext("x", "y", [3, 2], CUSP);
    let out = run_algorithm1(&e, &pinned(&[5, 11, 13])).unwrap();
    assert!(out.accepted(), "{:#?}", out.log);
    let state = out.state.as_ref().unwrap();
    assert_eq!(state.primes, vec![5, 11, 13]);
    assert_eq!(state.modulus, BigInt::from(715));
    let src = e.ring();
    let p = out.presentation().unwrap();
    let rb = p.ring();
    assert_eq!(state.reconciled.delta.display(src), "x + 101");
    assert_eq!(state.reconciled.relations[0].display(rb), "ybar^2 + 356*x");
    assert_eq!(state.reconciled.psi_y.display(rb), "ybar*x + 101*ybar");
    assert_eq!(src.display(p.fractions().delta()), "x - 8/7");
    let rels: Vec<String> = p.relations().iter().map(|r| rb.display(r)).collect();
    assert_eq!(rels, vec!["ybar^2 - 3/2*x"]);
    assert_eq!(rb.display(p.psi_y()), "ybar*x - 8/7*ybar");
    let cert = out.certificate.as_ref().unwrap();
    assert_eq!(cert.per_prime_specialization, vec![(5, true), (11, true), (13, true)]);
}

#[test]
fn cusp_rejected_at_55() {
    let e = ext("x", "y", [3, 2], CUSP);
    let out = run_algorithm1(&e, &pinned(&[5, 11])).unwrap();
    assert!(!out.accepted());
    let p = out.presentation().unwrap();
    assert_eq!(e.ring().display(p.fractions().delta()), "x + 1/6");
    let cert = out.certificate.as_ref().unwrap();
    assert!(cert.gb_check);
    assert!(!cert.containment_check);
    assert!(out.log.last().unwrap().contains("no candidate accepted"));
}

#[test]
fn cusp_runs_are_compatible() {
    let e = ext("x", "y", [3, 2], CUSP);
    let a = PrimeRun::unchecked(5, &e, 64).unwrap();
    let b = PrimeRun::unchecked(11, &e, 64).unwrap();
    assert!(compatibility_check(&[&a]));
    assert!(compatibility_check(&[&a, &b]));
    let fr = &a.data().unwrap().presentation;
    assert_eq!(fr.fractions().ring().display(fr.fractions().delta()), "x + 1");
}

#[test]
fn generic_cubic_restores_both_coefficients() {
    let e = ext("x", "y", [5, 3], GENERIC_CUBIC);
    let out = run_algorithm1(&e, &pinned(&[5, 11, 13])).unwrap();
    assert!(out.accepted(), "{:#?}", out.log);
    let p = out.presentation().unwrap();
    let rb = p.ring();
    let mut got: Vec<String> = p.relations().iter().map(|r| rb.display(r)).collect();
    got.sort();
    let mut want: Vec<String> = [
        "ybar2^2 + 1/3*ybar2 + 8/7*ybar1*x^3",
        "ybar2*ybar1 + 1/3*ybar1 + 8/7*x^4",
        "ybar1^2 - ybar2*x",
    ]
    .iter()
    .map(|s| rb.display(&rb.parse(s).unwrap()))
    .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn generic_cubic_wrong_at_55() {
    let e = ext("x", "y", [5, 3], GENERIC_CUBIC);
    let out = run_algorithm1(&e, &pinned(&[5, 11])).unwrap();
    assert!(!out.accepted());
    let p = out.presentation().unwrap();
    let rb = p.ring();
    let text: Vec<String> = p.relations().iter().map(|r| rb.display(r)).collect();
    assert!(text.iter().any(|r| r.contains("1/3*ybar2") && r.contains("1/6*ybar1*x^3")), "{text:?}");
}

#[test]
fn seven_relation_mislift_and_recovery() {
    let e = ext("x", "y", [7, 3], WEIGHTED_CUBIC);
    let out = run_algorithm1(&e, &pinned(&[7, 13])).unwrap();
    assert!(out.accepted(), "{:#?}", out.log);
    let good = out.presentation().unwrap();
    let rb = good.ring();

    // every coefficient through E_55 o mu_55, so that 8 becomes 1/7
    let n = BigInt::from(55);
    let relations = good
        .relations()
        .iter()
        .map(|r| rb.map_coefficients(r, rb, |c| Ok(rat_recon(&mod_n(c, &n)?, &n)?)).unwrap())
        .collect();
    let mislifted = ClosurePresentation::from_parts(
        rb.clone(),
        good.weights().clone(),
        relations,
        good.psi_y().clone(),
        good.fractions().clone(),
    );
    assert!(mislifted.relations().iter().any(|r| rb.display(r).contains("1/7*ybar1")));
    let cert = verify_candidate(&mislifted, &e).unwrap();
    assert!(cert.gb_check);
    assert!(!cert.containment_check);
    assert!(!cert.accepted);
    let residuals: Vec<String> = cert.residuals.iter().map(|r| rb.display(r)).collect();
    assert_eq!(residuals, vec!["55/7*ybar1*x"]);

    let eleven = PrimeRun::compute(11, &e, &out.delta0, 64);
    assert!(matches!(eleven.usability(), Usability::Skipped(SkipReason::Conductor { .. })));

    let p = good;
    let mut got: Vec<String> = p.relations().iter().map(|r| rb.display(r)).collect();
    got.sort();
    let mut want: Vec<String> = ["ybar2^2 + ybar1*x^5 + 8*ybar2", "ybar2*ybar1 + x^6 + 8*ybar1", "ybar1^2 - ybar2*x"]
        .iter()
        .map(|s| rb.display(&rb.parse(s).unwrap()))
        .collect();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn characteristic_two_closure_is_incompatible() {
    let e = ext("x", "y", [7, 3], WEIGHTED_CUBIC);
    let two = PrimeRun::unchecked(2, &e, 64).unwrap();
    let seven = PrimeRun::unchecked(7, &e, 64).unwrap();
    assert!(!compatibility_check(&[&two, &seven]));
    assert!(LiftState::from_runs(&e, &[&two, &seven]).is_err());
}

#[test]
fn usability_of_the_quadratic() {
    let e = ext("x1", "y1", [9, 2], QUADRATIC);
    let delta0 = e.ring().parse("x1^4").unwrap();
    for q in [2, 11] {
        assert_eq!(is_prime_usable(q, &e, &delta0), Usability::Skipped(SkipReason::Denominator), "q = {q}");
    }
    assert_eq!(is_prime_usable(13, &e, &delta0), Usability::Skipped(SkipReason::Numerator));
    for q in [3, 5] {
        assert!(
            matches!(is_prime_usable(q, &e, &delta0), Usability::Skipped(SkipReason::Conductor { .. })),
            "q = {q}"
        );
    }
    for q in [7, 17, 19] {
        assert_eq!(is_prime_usable(q, &e, &delta0), Usability::Usable, "q = {q}");
    }
}

#[test]
fn quadratic_lifts_with_2261() {
    let e = ext("x1", "y1", [9, 2], QUADRATIC);
    let out = run_algorithm1(&e, &pinned(&[7, 17, 19])).unwrap();
    assert!(out.accepted(), "{:#?}", out.log);
    let p = out.presentation().unwrap();
    let rb = p.ring();
    assert_eq!(e.ring().display(&out.delta0), "x1^4");
    let rels: Vec<String> = p.relations().iter().map(|r| rb.display(r)).collect();
    assert_eq!(
        rels,
        vec![rb.display(&rb.parse("ybar^2 + 13/22*x1^5 + 13/22*x1^3 + 13/22*x1").unwrap())]
    );
}

#[test]
fn usability_of_the_cusp() {
    let e = ext("x", "y", [3, 2], CUSP);
    let delta0 = e.ring().parse("x - 8/7").unwrap();
    for q in [2, 7] {
        assert_eq!(is_prime_usable(q, &e, &delta0), Usability::Skipped(SkipReason::Denominator));
    }
    assert_eq!(is_prime_usable(3, &e, &delta0), Usability::Skipped(SkipReason::Numerator));
    assert_eq!(is_prime_usable(101, &e, &delta0), Usability::Usable);
}

#[test]
fn default_schedule_finds_the_cusp() {
    let e = ext("x", "y", [3, 2], CUSP);
    let out = run_algorithm1(&e, &LiftConfig::default()).unwrap();
    assert!(out.accepted(), "{:#?}", out.log);
    let cand = out.presentation().unwrap();
    assert!(verify_candidate(cand, &e).unwrap().accepted);
}

