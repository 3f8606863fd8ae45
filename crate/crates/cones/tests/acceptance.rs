//! The acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`) and enforcing its time
//! budget.

use cones::amalgam::{
    pattern_member, pattern_reachable_in_box, refinement_step, RefinementStep,
};
use cones::backend::Nat;
use cones::corpus;
use cones::decision::Decision;
use cones::equations::is_refinement;
use cones::extension::{division_extend, wsd_extend};
use cones::finite::{
    all_congruences, cancellative_quotient, decompose_multiple, meet_in_class,
    p_torsion_quotient, quotient, separative_quotient, subcone_at,
};
use cones::lambda::{wsd_counterexample, wsd_counterexample_search};
use cones::predicates::{
    is_cancellative, is_conical, is_p_torsion_free, is_separative, is_simple,
    quasi_divisible_witness,
};
use cones::presentation::{ExpVec, Presentation, PresentedMonoid};
use cones::pset::PSet;
use cones::qcone::{verify_claim1, verify_claim2, verify_nonmembership};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

fn conclude(name: &str, started: Instant, budget: Duration, ok: bool) {
    let elapsed = started.elapsed();
    let verdict = if ok && elapsed <= budget { "PASS" } else { "FAIL" };
    println!("[{verdict}] {name} ({elapsed:?}, budget {budget:?})");
    assert!(ok, "{name}: checks failed");
    assert!(
        elapsed <= budget,
        "{name}: exceeded budget {budget:?} with {elapsed:?}"
    );
}

#[test]
fn criterion_1_pattern_oracle_matches_box_search() {
    let started = Instant::now();
    let reachable = pattern_reachable_in_box(6);
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for v0 in 0..=6u64 {
        for v1 in 0..=6u64 {
            for v2 in 0..=6u64 {
                for v3 in 0..=6u64 {
                    let v = [v0, v1, v2, v3];
                    checked += 1;
                    if pattern_member(&v) != reachable.contains(&v) {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    conclude(
        "criterion 1: pattern membership oracle agrees on all 2401 box vectors",
        started,
        Duration::from_secs(1),
        checked == 2401 && mismatches == 0,
    );
}

#[test]
fn criterion_2_refinement_step_on_the_free_monoid() {
    let started = Instant::now();
    let base = PresentedMonoid::new(Presentation::free(vec!["t".into()])).unwrap();
    let t = ExpVec(vec![1]);
    let step = refinement_step(&base, &t, &t, &t, &t).unwrap();
    let ok = match step {
        RefinementStep::Direct(_) => false,
        RefinementStep::Extended(ext) => {
            ext.monoid.system().is_complete()
                && ext.monoid.system().critical_pairs_join()
                && ext.matrix_valid()
                && ext.embedding_injective_on_ball(&base, 5)
                && ext
                    .unitary_on_ball(&base, 5)
                    .is_ok_and(|c| c.decision == Decision::True)
        }
    };
    conclude(
        "criterion 2: refinement step adjoins a verified matrix over the free base",
        started,
        Duration::from_secs(5),
        ok,
    );
}

#[test]
fn criterion_3_division_extensions_over_truncations() {
    let started = Instant::now();
    let mut ok = true;
    let bases = [corpus::trunc(2), corpus::trunc(3), corpus::trunc(4)];
    for m in &bases {
        for p in [2u32, 3] {
            for a in 1..m.size() {
                let ext = division_extend(m.clone(), a, p).unwrap();
                let checks = ext.verify(0);
                ok &= checks.divides;
                ok &= checks.embedding_injective;
                ok &= checks.unit_translation;
            }
        }
    }
    conclude(
        "criterion 3: division extensions verify exactly on all truncations",
        started,
        Duration::from_secs(1),
        ok,
    );
}

#[test]
fn criterion_4_wsd_confluence_on_sampled_peaks() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut peaks = 0usize;
    let mut failures = 0usize;
    let mut instances_ok = true;

    // five bases, one valid instance each
    let chain2 = corpus::trunc(2);
    let chain3 = corpus::trunc(3);
    let diamond = corpus::diamond();
    let two_three = corpus::two_three();

    // the naturals: a0 = 1, a1 = 1, b = 2, c = 3
    {
        let ext = wsd_extend(Nat, 1, 1, 2, 3).unwrap();
        instances_ok &= ext.verify(5).instance_solved;
        while peaks < 2_500 {
            let x: u64 = rng.gen_range(0..12);
            let r = (rng.gen_range(0..5u32), rng.gen_range(0..5u32));
            let reducts = ext.one_step_reducts(&x, r);
            if reducts.len() < 2 {
                continue;
            }
            peaks += 1;
            let forms: Vec<_> = reducts.iter().map(|(y, s)| ext.nf(y, *s)).collect();
            if forms.iter().any(|f| f != &forms[0]) {
                failures += 1;
            }
        }
    }
    let finite_instances = [
        (&chain2, (1usize, 1usize, 1usize, 2usize)), // 1 + 1 + inf = 1 + inf
        (&chain3, (1, 2, 3, 1)),                     // 1 + 2 + 1 = inf + 1
        (&diamond, (1, 2, 3, 0)),                    // x + y + 0 = t + 0
        (&two_three, (1, 1, 2, 0)),                  // g + g + 0 = 2g + 0
    ];
    for (m, (a0, a1, b, c)) in finite_instances {
        let ext = wsd_extend(m.clone(), a0, a1, b, c).unwrap();
        instances_ok &= ext.verify(4).instance_solved;
        let goal = peaks + 2_000;
        while peaks < goal {
            let x: usize = rng.gen_range(0..m.size());
            let r = (rng.gen_range(0..5u32), rng.gen_range(0..5u32));
            let reducts = ext.one_step_reducts(&x, r);
            if reducts.len() < 2 {
                continue;
            }
            peaks += 1;
            let forms: Vec<_> = reducts.iter().map(|(y, s)| ext.nf(y, *s)).collect();
            if forms.iter().any(|f| f != &forms[0]) {
                failures += 1;
            }
        }
    }
    conclude(
        &format!("criterion 4: local confluence on {peaks} sampled peaks, {failures} failures"),
        started,
        Duration::from_secs(10),
        peaks >= 10_000 && failures == 0 && instances_ok,
    );
}

#[test]
fn criterion_5_quotient_minimality_and_conicality() {
    let started = Instant::now();
    let pset = PSet::new(vec![2]).unwrap();
    let mut ok = true;
    for (name, m) in corpus::corpus() {
        if m.size() > 6 {
            continue;
        }
        let congs = all_congruences(&m).unwrap();
        let (cq, cancel) = cancellative_quotient(&m);
        let (sq, separ) = separative_quotient(&m);
        ok &= is_cancellative(&cq, 0).decision.is_true();
        ok &= is_separative(&sq, 0).decision.is_true();
        for theta in &congs {
            let q = quotient(&m, theta);
            if is_cancellative(&q, 0).decision.is_true() {
                ok &= cancel.is_contained_in(theta);
            }
            if is_separative(&q, 0).decision.is_true() {
                ok &= separ.is_contained_in(theta);
            }
        }
        if is_conical(&m, 0).decision.is_true() {
            let (tq, _) = p_torsion_quotient(&m, &pset);
            ok &= is_conical(&cq, 0).decision.is_true();
            ok &= is_conical(&sq, 0).decision.is_true();
            ok &= is_conical(&tq, 0).decision.is_true();
        }
        assert!(ok, "failure at corpus monoid {name}");
    }
    conclude(
        "criterion 5: canonical congruences are least; conicality passes to quotients",
        started,
        Duration::from_secs(60),
        ok,
    );
}

#[test]
fn criterion_6_decompositions_meets_and_subcones() {
    let started = Instant::now();
    let mut ok = true;
    let mut monoids = 0;
    for (name, m) in corpus::corpus() {
        if !is_conical(&m, 0).decision.is_true() {
            continue;
        }
        // subcones of every conical corpus monoid are simple
        for a in 0..m.size() {
            let (sub, _) = subcone_at(&m, a).unwrap();
            ok &= is_simple(&sub, (sub.size() + 2) as u32).decision.is_true();
        }
        if m.size() > 5 || !is_refinement(&m, 0).decision.is_true() {
            continue;
        }
        monoids += 1;
        for a in 0..m.size() {
            for b in 0..m.size() {
                for n in 1..=3u32 {
                    for c in 0..m.size() {
                        if m.add_idx(a, b) != m.mul_idx(n, c) {
                            continue;
                        }
                        match decompose_multiple(&m, a, b, n, c) {
                            Ok(parts) => {
                                let mut sa = 0;
                                let mut sb = 0;
                                let mut sc = 0;
                                for (k, &ck) in parts.iter().enumerate() {
                                    sa = m.add_idx(sa, m.mul_idx(k as u32, ck));
                                    sb = m.add_idx(sb, m.mul_idx(n - k as u32, ck));
                                    sc = m.add_idx(sc, ck);
                                }
                                ok &= (sa, sb, sc) == (a, b, c);
                            }
                            Err(_) => ok = false,
                        }
                    }
                }
                if (a, b) != (0, 0) && m.asymp_idx(a, b) {
                    match meet_in_class(&m, a, b) {
                        Ok(c) => {
                            ok &= m.leq_idx(c, a) && m.leq_idx(c, b) && m.asymp_idx(c, a);
                        }
                        Err(_) => ok = false,
                    }
                }
            }
        }
        assert!(ok, "failure at corpus monoid {name}");
    }
    conclude(
        &format!("criterion 6: decompositions, meets and subcones on {monoids} refinement cones"),
        started,
        Duration::from_secs(60),
        ok && monoids >= 5,
    );
}

#[test]
fn criterion_7_halving_example_end_to_end() {
    let started = Instant::now();
    let claim1 = verify_claim1(6);
    let claim2 = verify_claim2(6, 4);
    let proper = verify_nonmembership(8);
    let ok = claim1.is_ok() && claim2.is_ok() && proper.is_ok();
    conclude(
        "criterion 7: halving-interval example verified with exact certificates",
        started,
        Duration::from_secs(30),
        ok,
    );
}

#[test]
fn criterion_8_lower_set_counterexample() {
    let started = Instant::now();
    let cx = wsd_counterexample();
    let search = wsd_counterexample_search(3);
    conclude(
        "criterion 8: lower-set instance verifies exactly and admits no witness",
        started,
        Duration::from_secs(1),
        cx.instance_holds && cx.impossible && matches!(search, Ok(None)),
    );
}

#[test]
fn criterion_9_torsion_freeness_and_quasi_divisibility_sweep() {
    let started = Instant::now();
    let mut ok = true;
    let psets = [
        PSet::new(vec![2]).unwrap(),
        PSet::new(vec![3]).unwrap(),
        PSet::new(vec![2, 3]).unwrap(),
    ];
    for (name, m) in corpus::corpus() {
        for pset in &psets {
            if is_p_torsion_free(&m, pset, 0).decision.is_true() {
                ok &= is_separative(&m, 0).decision.is_true();
            }
        }
        if cones::predicates::is_quasi_divisible(&m, 0).decision.is_true() {
            for x in 0..m.size() {
                match quasi_divisible_witness(&m, &x, 0) {
                    Some((u, v)) => {
                        let y = m.add_idx(u, v);
                        ok &= m.leq_idx(m.mul_idx(2, y), x) && m.leq_idx(x, m.mul_idx(3, y));
                    }
                    None => ok = false,
                }
            }
        }
        assert!(ok, "failure at corpus monoid {name}");
    }
    conclude(
        "criterion 9: torsion-freeness forces separativity; witnesses sandwich",
        started,
        Duration::from_secs(10),
        ok,
    );
}
