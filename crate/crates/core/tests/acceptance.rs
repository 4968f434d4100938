//! Acceptance checks. Run with
//! `cargo test -p symgroth --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num::{BigInt, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symgroth::arith::{factorial, q, qr, Q};
use symgroth::groth::{
    branching_check, duality_check, f_mu, first_row_removal_check, structure_constants, CapPolicy, Family,
    GrothElement,
};
use symgroth::measures::{corner_growth, corner_measure, harmonicity_check, hecke_measure};
use symgroth::shapes::{p, ExtendedSkewShape, Partition};
use symgroth::special::{
    gamma_value, gcond_value, induced_schur_spec, lambda_h_values, monotone_chain_holds, positivity_scan,
    schur_value, signed_g_values, signed_value_by_branching, EdreiThomaParams, GammaEvaluator, GammaSpec,
    HModel,
};
use symgroth::tableaux::{
    count_delegant, count_elegant, count_increasing, count_ssvt, delegant_determinant, elegant_determinant,
};
use symgroth::tnn::{is_totally_nonnegative, ToeplitzBand};
use symgroth::value::SpecValue;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn criterion(id: &str, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut o = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            o.pass = false;
            o.detail = format!("{}; over time limit {limit:?}", o.detail);
        }
    }
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    println!("{id:<4} {verdict}  {title}: {} [{:.2}s]", o.detail, elapsed.as_secs_f64());
    o.pass
}

fn random_rational(rng: &mut ChaCha8Rng, below_one: bool) -> Q {
    let d = rng.gen_range(2..=7);
    let n = if below_one { rng.gen_range(0..d) } else { rng.gen_range(1..=2 * d) };
    qr(n, d)
}

/// Twenty exact specs with up to three α's and up to three β's, every β < 1.
fn random_specs() -> Vec<EdreiThomaParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_611);
    (0..20)
        .map(|_| {
            let na = rng.gen_range(0..=3);
            let nb = rng.gen_range(0..=3);
            let alphas: Vec<Q> = (0..na).map(|_| random_rational(&mut rng, false)).collect();
            let betas: Vec<Q> = (0..nb).map(|_| random_rational(&mut rng, true)).collect();
            EdreiThomaParams { alphas, betas, ..Default::default() }
        })
        .collect()
}

fn a1() -> Outcome {
    let got = structure_constants(&p(&[1]), &p(&[1]), CapPolicy::default()).unwrap();
    let want: BTreeMap<Partition, Q> = [(p(&[2]), q(1)), (p(&[1, 1]), q(1)), (p(&[2, 1]), q(1))].into();
    outcome(got.coeffs() == &want, format!("{:?}", got))
}

fn a2() -> Outcome {
    let mus = Partition::all_up_to_len(5, 3);
    let mut bad = Vec::new();
    for mu in &mus {
        let f = f_mu(mu, CapPolicy::default()).unwrap();
        if !f.agree() || f.delegant.is_empty() {
            bad.push(mu.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{} shapes, disagreements {:?}", mus.len(), bad))
}

fn a3() -> Outcome {
    let (mut nd, mut nf, mut bad) = (0, 0, Vec::new());
    for nu in Partition::all_up_to(6) {
        for mu in nu.subpartitions() {
            nf += 1;
            if count_elegant(&nu, &mu) != elegant_determinant(&nu, &mu) {
                bad.push(format!("f {nu}/{mu}"));
            }
            if mu.len() == nu.len() {
                nd += 1;
                if count_delegant(&nu, &mu) != delegant_determinant(&nu, &mu) {
                    bad.push(format!("d {nu}/{mu}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("{nd} delegant and {nf} elegant instances, mismatches {bad:?}"))
}

fn a4() -> Outcome {
    let mut n = 0;
    let mut bad = Vec::new();
    for lam in Partition::all_up_to(4) {
        for fam in [Family::Gtilde, Family::Gdual] {
            n += 1;
            if !branching_check(&GrothElement::straight(fam, lam.clone()), 2, 2, 5).unwrap() {
                bad.push(format!("{fam:?} {lam}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} identities in 2+2 variables to degree 5, failures {bad:?}"))
}

fn a5(specs: &[EdreiThomaParams]) -> Outcome {
    let mut bad = Vec::new();
    for (i, s) in specs.iter().enumerate() {
        let spec = GammaSpec::from_params(s, 12).unwrap();
        let band = ToeplitzBand::from_gamma_spec(&spec, 6).unwrap();
        let exact = band.values().iter().all(SpecValue::is_exact);
        let verdict = is_totally_nonnegative(&band, 4).unwrap();
        if !exact || !verdict.is_pass() {
            bad.push(i);
        }
    }
    outcome(bad.is_empty(), format!("{} specs, size 6, order 4, failing {bad:?}", specs.len()))
}

fn a6(specs: &[EdreiThomaParams]) -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (i, s) in specs.iter().enumerate() {
        let h = induced_schur_spec(&GammaSpec::from_params(s, 12).unwrap(), 6).unwrap();
        for lam in Partition::all_up_to(6) {
            let v = schur_value(&h, &lam).unwrap();
            checked += 1;
            if !(v.is_exact() && v.certainly_nonnegative()) {
                bad.push(format!("spec {i} at {lam}: {v}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} values, negative {bad:?}"))
}

fn a7() -> Outcome {
    let spec = GammaSpec::phi_hat(qr(1, 2)).unwrap().union(&GammaSpec::phi_hat(qr(1, 3)).unwrap());
    let mut ev = GammaEvaluator::new(&spec);
    let main = harmonicity_check(|l| ev.straight(l), 6).unwrap();
    let mut one = GammaEvaluator::new(&GammaSpec::phi_hat(q(1)).unwrap());
    let mut rows_only = true;
    for lam in Partition::all_up_to(6) {
        let want = if lam.len() <= 1 { SpecValue::one() } else { SpecValue::zero() };
        rows_only &= one.straight(&lam).unwrap() == want;
    }
    let degenerate = harmonicity_check(|l| one.straight(l), 6).unwrap();
    outcome(
        main.is_pass() && degenerate.is_pass() && rows_only,
        format!("(1/2, 1/3): {:?}; alpha = 1: {:?}, row indicator {rows_only}", main, degenerate),
    )
}

fn a8(specs: &[EdreiThomaParams]) -> Outcome {
    let mut sets: Vec<EdreiThomaParams> =
        specs.iter().filter(|s| s.alphas.iter().all(|a| *a <= Q::one())).cloned().collect();
    sets.push(EdreiThomaParams { alphas: vec![q(1)], betas: vec![qr(1, 2)], ..Default::default() });
    let mut bad = Vec::new();
    for (i, s) in sets.iter().enumerate() {
        let g = signed_g_values(s, 8).unwrap();
        if !monotone_chain_holds(&g) || gcond_value(s) != g[1] {
            bad.push(format!("set {i}"));
        }
        for n in 1..=5 {
            let b = signed_value_by_branching(s, &ExtendedSkewShape::straight(Partition::row(n))).unwrap();
            if SpecValue::exact(b) != g[n] {
                bad.push(format!("set {i} row {n}"));
            }
        }
    }
    let mut removal = 0;
    for lam in Partition::all_up_to(4) {
        for mu in lam.subpartitions() {
            removal += 1;
            if !first_row_removal_check(&lam, &mu, 3, 5).unwrap() {
                bad.push(format!("row removal {lam}//{mu}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{} parameter sets, {removal} row removals, failures {bad:?}", sets.len()))
}

fn a9() -> Outcome {
    outcome(duality_check(5).unwrap(), "pairing block |lambda|, |mu| <= 5")
}

fn a10() -> Outcome {
    let mut ok = true;
    for n in 1..=8 {
        ok &= corner_growth(n).unwrap().total() == SpecValue::one();
    }
    let planch = lambda_h_values(&EdreiThomaParams::gamma(q(1)), 8);
    for n in 1..=6 {
        let t = corner_measure(&planch, n).unwrap();
        ok &= t.is_exact() && t.total() == SpecValue::one() && t.all_nonnegative();
    }
    let t3 = corner_growth(3).unwrap();
    let table: Vec<String> = t3.support.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let want = [(p(&[3]), qr(1, 4)), (p(&[2, 1]), qr(1, 2)), (p(&[1, 1, 1]), qr(1, 4))];
    ok &= t3.support.len() == 3 && want.iter().all(|(k, v)| t3.get(k) == SpecValue::exact(v.clone()));
    outcome(ok, format!("p_3 = {{{}}}", table.join(", ")))
}

fn a11(specs: &[EdreiThomaParams]) -> Outcome {
    let mut bad = Vec::new();
    for m in 1..=5 {
        for n in 1..=5 {
            let total: BigInt = Partition::all_up_to(m)
                .iter()
                .map(|lam| count_increasing(lam, n) * count_ssvt(lam, m))
                .sum();
            if total != num::pow(BigInt::from(n), m) {
                bad.push(format!("m={m} n={n}: {total}"));
            }
        }
    }
    let mut exact_specs: Vec<GammaSpec> = specs.iter().take(6).map(|s| GammaSpec::from_params(s, 12).unwrap()).collect();
    exact_specs.push(GammaSpec::phi_hat(qr(1, 2)).unwrap().union(&GammaSpec::eps_hat(qr(1, 3)).unwrap()));
    for (i, spec) in exact_specs.iter().enumerate() {
        for n in 1..=4 {
            let t = hecke_measure(spec, n).unwrap();
            if t.total() != SpecValue::one() || !t.all_nonnegative() {
                bad.push(format!("hecke spec {i} n={n}: {}", t.total()));
            }
        }
    }
    outcome(bad.is_empty(), format!("m, n <= 5 and {} Hecke specs, failures {bad:?}", exact_specs.len()))
}

fn a12() -> Outcome {
    let psi = EdreiThomaParams { betas: vec![qr(1, 2)], model: HModel::Dual, ..Default::default() };
    let h: Vec<SpecValue> = psi.h_values(2).into_iter().map(SpecValue::exact).collect();
    let found = positivity_scan(Partition::all_up_to(2), |l| schur_value(&h, l)).unwrap();
    let hit: Vec<(String, String)> = found.iter().map(|v| (v.key.to_string(), v.value.to_string())).collect();
    let ok = found.len() == 1 && found[0].key == p(&[1, 1]) && found[0].value == SpecValue::exact(qr(-1, 4));
    outcome(ok, format!("violations {hit:?}"))
}

fn a13() -> Outcome {
    let v = gamma_value(&GammaSpec::pi_hat(q(1), 12).unwrap(), &ExtendedSkewShape::straight(p(&[1]))).unwrap();
    // S_N <= e < S_N + 1/(N N!) with S_N = Σ_{k≤N} 1/k!
    let n = 80u64;
    let s_n: Q = (0..=n).map(|k| Q::one() / Q::from_integer(factorial(k))).sum();
    let lower = &s_n - q(1);
    let upper = s_n + Q::one() / Q::from_integer(factorial(n) * BigInt::from(n)) - q(1);
    let width = v.width();
    let ok = width < qr(1, 1_000_000) && v.lo() <= &lower && &upper <= v.hi() && !width.is_zero();
    outcome(ok, format!("width {:.3e}", symgroth::arith::to_f64(&width)))
}

#[test]
fn acceptance() {
    let specs = random_specs();
    let results = [
        criterion("A1", "Pieri instance", Some(Duration::from_secs(1)), a1),
        criterion("A2", "F_mu determinant vs delegant", Some(Duration::from_secs(120)), a2),
        criterion("A3", "delegant and elegant determinants", None, a3),
        criterion("A4", "branching identities", None, a4),
        criterion("A5", "Toeplitz total nonnegativity", None, || a5(&specs)),
        criterion("A6", "induced Schur positivity", None, || a6(&specs)),
        criterion("A7", "normalized harmonicity", None, a7),
        criterion("A8", "signed family", None, || a8(&specs)),
        criterion("A9", "duality", None, a9),
        criterion("A10", "corner growth", None, a10),
        criterion("A11", "Plancherel-Hecke and Hecke measures", None, || a11(&specs)),
        criterion("A12", "psi_1/2 negative control", None, a12),
        criterion("A13", "pi-hat interval", None, a13),
    ];
    assert!(results.iter().all(|&r| r), "acceptance failures");
}
