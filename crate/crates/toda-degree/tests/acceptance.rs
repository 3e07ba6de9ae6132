//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Everything is exact integer or rational arithmetic, tolerance
//! zero. Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use toda_degree::config::{CartanKind, CartanMatrix, SingularPoint};
use toda_degree::pohozaev::{concentration_for_coupling, enumerate_for_coupling};
use toda_degree::{
    blowup_location_sum, classify_blowup_scenarios, enumerate_local_masses, gap_check,
    mean_field_gf, pohozaev_residual, rho_from_ramification, rho_interval_index, shadow_gf,
    toda_gf_no_singularity, toda_gf_rho1_first_interval, LocalMassPair, ProblemConfig,
    RhoInterval, SingularWeights, TruncatedSeries,
};

fn pass(n: u32, what: &str) {
    println!("criterion {n}: PASS - {what}");
}

fn fail(n: u32, what: &str) -> ! {
    println!("criterion {n}: FAIL - {what}");
    panic!("criterion {n} failed: {what}");
}

fn config(chi: i64, kind: CartanKind, pts: &[(u32, u32)], n: usize) -> ProblemConfig {
    let points = pts
        .iter()
        .enumerate()
        .map(|(i, &(a1, a2))| SingularPoint::new(format!("p{i}"), a1, a2))
        .collect();
    ProblemConfig::new(chi, kind, points, n).unwrap()
}

#[test]
fn acceptance_01_single_weight_one_point() {
    let table = toda_gf_rho1_first_interval(&config(2, CartanKind::A2, &[(0, 1)], 32));
    let got = table.degree_at(1);
    if *got != BigInt::from(-1) {
        fail(1, &format!("d_{{1,1}} for one alpha2=1 point on the sphere is {got}, expected -1"));
    }
    pass(1, "one alpha2=1 point on the sphere gives d_{1,1} = -1");
}

#[test]
fn acceptance_02_two_weight_one_points() {
    let table = toda_gf_rho1_first_interval(&config(2, CartanKind::A2, &[(0, 1), (0, 1)], 32));
    let got = table.degree_at(2);
    if *got != BigInt::from(-1) {
        fail(2, &format!("d_{{1,2}} for two alpha2=1 points is {got}, expected -1"));
    }
    pass(2, "two alpha2=1 points on the sphere give d_{1,2} = -1");
}

#[test]
fn acceptance_03_single_weight_two_point() {
    let table = toda_gf_rho1_first_interval(&config(2, CartanKind::A2, &[(0, 2)], 32));
    let got = table.degree_at(2);
    if !got.is_zero() {
        fail(3, &format!("d_{{1,2}} for one alpha2=2 point is {got}, expected 0"));
    }
    pass(3, "one alpha2=2 point on the sphere gives d_{1,2} = 0");
}

#[test]
fn acceptance_04_local_mass_lists() {
    let expected: [(CartanKind, &[(u64, u64)]); 3] = [
        (CartanKind::A2, &[(0, 2), (2, 0), (2, 4), (4, 2), (4, 4)]),
        (
            CartanKind::B2,
            &[(0, 2), (2, 0), (2, 6), (4, 2), (4, 8), (6, 6), (6, 8)],
        ),
        (
            CartanKind::G2,
            &[
                (0, 2),
                (2, 0),
                (2, 8),
                (4, 2),
                (4, 12),
                (8, 8),
                (8, 18),
                (10, 12),
                (10, 20),
                (12, 18),
                (12, 20),
            ],
        ),
    ];
    let regular = SingularWeights::regular();
    for (kind, list) in expected {
        let cartan = CartanMatrix::new(kind);
        let want: Vec<LocalMassPair> = list.iter().map(|&(a, b)| LocalMassPair::new(a, b)).collect();
        let got = enumerate_local_masses(&cartan, &regular);
        if got != want {
            fail(4, &format!("{kind} mass list is {got:?}, expected {want:?}"));
        }
        // independent scan of the even lattice up to 64
        let mut brute = Vec::new();
        for s1 in (0..=64).step_by(2) {
            for s2 in (0..=64).step_by(2) {
                let m = LocalMassPair::new(s1, s2);
                if (s1, s2) != (0, 0) && pohozaev_residual(&cartan, &regular, &m) == 0 {
                    brute.push(m);
                }
            }
        }
        if brute != want {
            fail(4, &format!("{kind} brute-force scan found {brute:?}"));
        }
    }
    pass(4, "mass lists have exactly 5 (A2), 7 (B2), 11 (G2) pairs; lattice scan to 64 agrees");
}

#[test]
fn acceptance_05_closed_form_consistency() {
    for chi in -4..=2 {
        for kind in CartanKind::ALL {
            let cfg = config(chi, kind, &[], 32);
            let general = toda_gf_rho1_first_interval(&cfg);
            let closed = toda_gf_no_singularity(chi, &cfg.cartan, 32);
            if general.series != closed.series {
                fail(5, &format!("empty-set specialization disagrees with the closed form at chi={chi}, {kind}"));
            }
        }
    }
    pass(5, "empty-set specialization equals the closed form for chi in [-4,2], all kinds, N=32");
}

#[test]
fn acceptance_06_gap_identity_sweep() {
    let point_sets: [&[(u32, u32)]; 5] = [
        &[],
        &[(0, 1)],
        &[(1, 1), (0, 2)],
        &[(2, 0), (1, 1), (0, 2)],
        &[(1, 2)],
    ];
    let mut count = 0;
    for chi in -3..=2 {
        for kind in CartanKind::ALL {
            for pts in point_sets {
                let report = gap_check(&config(chi, kind, pts, 32));
                if !report.all_zero() {
                    fail(6, &format!(
                        "gap residual nonzero at chi={chi}, {kind}, points {pts:?}: {}",
                        report.residual
                    ));
                }
                count += 1;
            }
        }
    }
    assert!(count >= 50);
    pass(6, &format!("gap residuals identically zero on {count} configurations"));
}

#[test]
fn acceptance_07_mean_field_baseline() {
    // Asserted baseline: chi = 2 with no singular set gives d_0 = 1 and
    // every higher coefficient 0. The defining product
    // (1-x)^{chi-|S0|-1} prod_p (1-x^{1+alpha_p}) evaluates to (1 - x)
    // here, i.e. d_1 = -1; a constant table would also contradict the gap
    // identity of criterion 6 on the empty sphere configs. The strict
    // baseline is kept as stated and reported honestly.
    let table = mean_field_gf(2, &[], 32);
    if *table.degree_at(0) != BigInt::from(1) {
        fail(7, &format!("d_0 is {}, expected 1", table.degree_at(0)));
    }
    if let Some(j) = (1..=32).find(|&j| !table.degree_at(j).is_zero()) {
        fail(7, &format!(
            "higher coefficients expected to vanish, but the table is {} with d_{j} = {}",
            table.series,
            table.degree_at(j)
        ));
    }
    pass(7, "mean field table for chi=2 is the constant 1");
}

#[test]
fn acceptance_08_shadow_sign_property() {
    let nonempty_sets: [&[(u32, u32)]; 4] = [&[(0, 1)], &[(1, 0)], &[(1, 1), (0, 2)], &[(2, 2)]];
    for chi in -3..0 {
        for kind in CartanKind::ALL {
            for pts in [&[][..]].into_iter().chain(nonempty_sets) {
                let table = shadow_gf(&config(chi, kind, pts, 32));
                if let Some(j) = table.series.coeffs().iter().position(|c| c >= &BigInt::zero()) {
                    fail(8, &format!(
                        "chi={chi}, {kind}, points {pts:?}: d_{j}^S = {} is not negative",
                        table.degree_at(j)
                    ));
                }
            }
        }
    }
    for kind in CartanKind::ALL {
        for pts in nonempty_sets {
            let table = shadow_gf(&config(0, kind, pts, 32));
            // j = 0 may vanish when S1 is empty; it is documented, not asserted
            if let Some(j) = table.series.coeffs()[1..]
                .iter()
                .position(|c| c >= &BigInt::zero())
            {
                fail(8, &format!(
                    "chi=0, {kind}, points {pts:?}: d_{}^S = {} is not negative",
                    j + 1,
                    table.degree_at(j + 1)
                ));
            }
        }
    }
    pass(8, "shadow coefficients strictly negative (chi<0: all j; chi=0 nonempty: j>=1)");
}

#[test]
fn acceptance_09_rho_classification() {
    let a2 = CartanMatrix::new(CartanKind::A2);
    let first = rho_from_ramification(&a2, 0, 1).unwrap();
    if first.rho1_over_4pi != Rational64::new(4, 3) || first.rho2_over_4pi != Rational64::new(5, 3)
    {
        fail(9, &format!(
            "ramification (0,1) gives rho/4pi = ({}, {}), expected (4/3, 5/3)",
            first.rho1_over_4pi, first.rho2_over_4pi
        ));
    }
    for rho in [first.rho1_over_4pi, first.rho2_over_4pi] {
        if rho_interval_index(rho).unwrap() != RhoInterval::Index(1) {
            fail(9, &format!("rho/4pi = {rho} did not classify into interval 1"));
        }
    }
    let second = rho_from_ramification(&a2, 0, 2).unwrap();
    if second.rho1_over_4pi != Rational64::new(5, 3)
        || second.rho2_over_4pi != Rational64::new(7, 3)
    {
        fail(9, &format!(
            "ramification (0,2) gives rho/4pi = ({}, {}), expected (5/3, 7/3)",
            second.rho1_over_4pi, second.rho2_over_4pi
        ));
    }
    if rho_interval_index(second.rho2_over_4pi).unwrap() != RhoInterval::Index(2) {
        fail(9, "rho2/4pi = 7/3 did not classify into interval 2");
    }
    pass(9, "ramification (0,1) -> (4/3, 5/3) in interval 1; (0,2) -> rho2 = 7/3 in interval 2");
}

#[test]
fn acceptance_10_blowup_scenarios() {
    let expected_sigma: [(i64, &[u64]); 3] = [(-1, &[2]), (-2, &[2, 4]), (-3, &[2, 4])];
    for (k21, sigma) in expected_sigma {
        let report = classify_blowup_scenarios(k21, 1).unwrap();
        if report.admissible_sigma != sigma {
            fail(10, &format!(
                "K21={k21}: admissible sigma {:?}, expected {sigma:?}",
                report.admissible_sigma
            ));
        }
        if report.blow_up_at_e_allowed {
            fail(10, &format!("K21={k21}: blow-up at e must never be allowed"));
        }
        let origin_expected = k21 == -3;
        if report.blow_up_at_origin_allowed != origin_expected {
            fail(10, &format!(
                "K21={k21}, alpha=1: origin blow-up allowed = {}, expected {origin_expected}",
                report.blow_up_at_origin_allowed
            ));
        }
    }
    for k21 in [-1, -2, -3] {
        if classify_blowup_scenarios(k21, 2).unwrap().blow_up_at_origin_allowed {
            fail(10, &format!("K21={k21}, alpha=2: origin blow-up must not be allowed"));
        }
    }
    pass(10, "origin blow-up only for (G2, alpha=1); e never; sigma sets {2}, {2,4}, {2,4}");
}

#[test]
fn acceptance_11_randomized_property_suites() {
    const CASES: usize = 1000;
    let mut rng = StdRng::seed_from_u64(0x70da_de67);
    let kinds = CartanKind::ALL;

    for case in 0..CASES {
        // series ring axioms and truncation coherence at degree 24 -> 12
        let n = 24;
        let rand_series = |rng: &mut StdRng| {
            let coeffs: Vec<i64> = (0..=n).map(|_| rng.gen_range(-1_000_000..1_000_000)).collect();
            TruncatedSeries::from_ints(&coeffs, n)
        };
        let (a, b, c) = (rand_series(&mut rng), rand_series(&mut rng), rand_series(&mut rng));
        if &(&a + &b) + &c != &a + &(&b + &c)
            || &a * &b != &b * &a
            || &(&a * &b) * &c != &a * &(&b * &c)
            || &a * &(&b + &c) != &(&a * &b) + &(&a * &c)
        {
            fail(11, &format!("ring axiom violated at case {case}"));
        }
        if (&a * &b).truncate(12) != &a.truncate(12) * &b.truncate(12) {
            fail(11, &format!("truncation coherence violated at case {case}"));
        }

        // mass algebra over random kind and weights
        let kind = kinds[rng.gen_range(0..3)];
        let cartan = CartanMatrix::new(kind);
        let w = SingularWeights::new(rng.gen_range(0..4), rng.gen_range(0..4));
        let masses = enumerate_local_masses(&cartan, &w);
        for m in &masses {
            if pohozaev_residual(&cartan, &w, m) != 0 {
                fail(11, &format!("nonzero residual on enumerated mass {m:?} at case {case}"));
            }
            if !concentration_for_coupling(cartan.k12(), cartan.k21(), &w, m).any_holds() {
                fail(11, &format!("concentration fails on {m:?} ({kind}, {w:?}) at case {case}"));
            }
        }
        let mut swapped: Vec<LocalMassPair> =
            enumerate_for_coupling(cartan.k21(), cartan.k12(), &w.swapped())
                .unwrap()
                .iter()
                .map(LocalMassPair::swapped)
                .collect();
        swapped.sort();
        if masses != swapped {
            fail(11, &format!("transpose symmetry violated ({kind}, {w:?}) at case {case}"));
        }

        // location sums stay positive over the proven hypothesis
        let cluster = rng.gen_range(1..=2);
        let alpha = rng.gen_range(1..=2);
        let k21 = -rng.gen_range(1..=3);
        if blowup_location_sum(cluster, alpha, k21).unwrap() <= 0 {
            fail(11, &format!(
                "location sum not positive for n={cluster}, alpha={alpha}, K21={k21}"
            ));
        }
    }
    pass(11, &format!("{CASES} randomized cases per property suite"));
}
