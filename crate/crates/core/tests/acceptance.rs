//! Acceptance run: eight criteria, each with its own runtime budget. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::collections::{BTreeMap, HashMap};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use padic_cuspidal::analytic::{
    char_binomial, char_exp_log, standard_kappa, validate_radius, RadiusParams, RadiusViolation,
    Verdict,
};
use padic_cuspidal::groups::{
    bruhat_decompose, cartan_representative, diag, enumerate_gl2, h0_vanishing_check,
    iwahori_factor, mackey_cosets, ore_witness, BruhatCell, FiniteLevelMatrix, Pbw, PbwMonomial,
};
use padic_cuspidal::irreducibility::{
    build_table, certify_divergence, linear_solve_table, mat_from, mat_mul, u_minus, u_plus,
    verify_intertwiner_equation, CaseTag, ConjugationParams, IntertwinerTable, Mat2, Seeds,
};
use padic_cuspidal::padic::{ExactScalar, FieldSpec, PadicScalar};
use padic_cuspidal::weights::{
    apply_root_operator, apply_torus, check_cuspidality, CuspidalModuleSpec, LatticePoint,
    ModuleElement,
};

type Outcome = Result<String, String>;

fn rng(salt: u64) -> ChaCha8Rng {
    let seed = std::env::var("PADIC_SEED")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .unwrap_or(0);
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

/// A random rational `r/s` with `p` dividing neither.
fn unit_ratio(rng: &mut impl Rng, p: i64) -> (i64, i64) {
    let pick = |rng: &mut dyn rand::RngCore| loop {
        let x: i64 = rng.gen_range(1..=24);
        if x % p != 0 {
            return x;
        }
    };
    let r = pick(rng);
    let s = pick(rng);
    (if rng.gen_bool(0.5) { r } else { -r }, s)
}

fn pi_times(f: &FieldSpec, q: (i64, i64), k: i64) -> ExactScalar {
    ExactScalar::ratio(f, q.0, q.1).unwrap() * &ExactScalar::pi_power(f, k)
}

// ---------------------------------------------------------------------------
// 1. [e,f] acts as diag(1,-1)

fn sl2_relation() -> Outcome {
    let mut rng = rng(1);
    let mut checked = 0;
    for trial in 0..200 {
        let f = FieldSpec::new(5, 1 + (trial % 2) as u32, 30).unwrap();
        let mu: Vec<ExactScalar> = (0..2)
            .map(|_| {
                let q = unit_ratio(&mut rng, 5);
                pi_times(&f, q, rng.gen_range(-1..=2))
                    + &ExactScalar::from_int(&f, rng.gen_range(-3..=3))
            })
            .collect();
        let spec = CuspidalModuleSpec::new(f.clone(), mu, 8).unwrap().shared();
        let nterms = rng.gen_range(1..=6);
        let terms: Vec<(LatticePoint, ExactScalar)> = (0..nterms)
            .map(|_| {
                let x = rng.gen_range(-7..=7);
                let q = unit_ratio(&mut rng, 7);
                (
                    LatticePoint::alpha_multiple(x),
                    ExactScalar::ratio(&f, q.0, q.1).unwrap(),
                )
            })
            .collect();
        let v = ModuleElement::from_terms(&spec, terms);
        let ef = apply_root_operator(&apply_root_operator(&v, 1, 0), 0, 1);
        let fe = apply_root_operator(&apply_root_operator(&v, 0, 1), 1, 0);
        let z = apply_torus(&v, &[ExactScalar::one(&f), ExactScalar::from_int(&f, -1)]);
        if !ef.sub(&fe).sub(&z).is_zero() {
            return Err(format!("relation fails on element {trial}"));
        }
        checked += 1;
    }
    Ok(format!("{checked} elements, exact"))
}

// ---------------------------------------------------------------------------
// 2. Cuspidality against integrality

fn cuspidality_grid() -> Outcome {
    let f = FieldSpec::new(5, 2, 30).unwrap();
    // (value, is an integer) with the flag fixed by construction.
    let values: Vec<(ExactScalar, bool)> = vec![
        (ExactScalar::from_int(&f, -3), true),
        (ExactScalar::from_int(&f, -1), true),
        (ExactScalar::from_int(&f, 0), true),
        (ExactScalar::from_int(&f, 2), true),
        (ExactScalar::from_int(&f, 5), true),
        (ExactScalar::ratio(&f, 1, 2).unwrap(), false),
        (ExactScalar::ratio(&f, -7, 3).unwrap(), false),
        (ExactScalar::ratio(&f, 5, 4).unwrap(), false),
        (ExactScalar::pi_power(&f, 1), false),
        (
            ExactScalar::from_int(&f, 3) + &pi_times(&f, (1, 2), 1),
            false,
        ),
    ];
    let mut disagreements = Vec::new();
    for (i, (m0, int0)) in values.iter().enumerate() {
        for (j, (m1, int1)) in values.iter().enumerate() {
            let spec = CuspidalModuleSpec::new(f.clone(), vec![m0.clone(), m1.clone()], 8).unwrap();
            let expected = !int0 && !int1;
            match check_cuspidality(&spec) {
                Ok(r) if r.cuspidal == expected => {}
                Ok(r) => disagreements.push(format!("({i},{j}): window says {}", r.cuspidal)),
                Err(e) => disagreements.push(format!("({i},{j}): {e}")),
            }
        }
    }
    if disagreements.is_empty() {
        Ok(format!(
            "{} points, 0 disagreements",
            values.len() * values.len()
        ))
    } else {
        Err(disagreements.join("; "))
    }
}

// ---------------------------------------------------------------------------
// 3. Recurrence tables against the operator equation and a linear solve

fn admissible_point(
    rng: &mut ChaCha8Rng,
    f: &FieldSpec,
    case: CaseTag,
) -> ([ExactScalar; 2], ConjugationParams) {
    let ks = [-1i64, 1, 3];
    let k0 = ks[rng.gen_range(0..3)];
    let k1 = loop {
        let k = ks[rng.gen_range(0..3)];
        if k != k0 {
            break k;
        }
    };
    let mu = [
        pi_times(f, unit_ratio(rng, 5), k0),
        pi_times(f, unit_ratio(rng, 5), k1),
    ];
    let coeff = |rng: &mut ChaCha8Rng| {
        let k = rng.gen_range(-2..=4);
        let (r, s) = unit_ratio(rng, 5);
        pi_times(f, (r, s), k)
    };
    let zero = ExactScalar::zero(f);
    let (a, b) = match case {
        CaseTag::BZero => (coeff(rng), zero),
        CaseTag::AZero => (zero, coeff(rng)),
        CaseTag::Both => (coeff(rng), coeff(rng)),
    };
    (mu, ConjugationParams::new(a, b, rng.gen_range(1..=3)))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = rng(3);
    let f = FieldSpec::new(5, 2, 64).unwrap();
    let mut summary = Vec::new();
    for case in [CaseTag::BZero, CaseTag::AZero, CaseTag::Both] {
        let mut done = 0;
        let started = Instant::now();
        while done < 50 {
            let (mu, params) = admissible_point(&mut rng, &f, case);
            let pre = padic_cuspidal::weights::irreducibility_precheck(&mu, (0, 0)).unwrap();
            if !pre.all_passed() {
                return Err(format!(
                    "generator produced an inadmissible point: {:?}",
                    pre.first_failure()
                ));
            }
            let seeds = match case {
                CaseTag::Both => Seeds::new(
                    ExactScalar::one(&f),
                    Some(pi_times(&f, unit_ratio(&mut rng, 5), 1)),
                ),
                _ => Seeds::normalized(&f),
            };
            let table: IntertwinerTable<ExactScalar> =
                build_table([&mu[0], &mu[1]], &params, &seeds, 31)
                    .map_err(|e| format!("{case:?}: {e}"))?;
            let report = verify_intertwiner_equation(&table, 30).map_err(|e| e.to_string())?;
            if !report.is_zero() {
                return Err(format!(
                    "{case:?}: nonzero residual at {:?}",
                    report.nonzero_indices()
                ));
            }
            let solve = linear_solve_table([&mu[0], &mu[1]], &params, &seeds, 31)
                .map_err(|e| e.to_string())?;
            if !solve.reproduces_table() {
                return Err(format!(
                    "{case:?}: linear solve undetermined {:?} mismatches {:?}",
                    solve.undetermined, solve.mismatches
                ));
            }
            done += 1;
        }
        summary.push(format!(
            "{case:?} {done} ({:.1}s)",
            started.elapsed().as_secs_f64()
        ));
    }
    Ok(format!(
        "{}; window 30, zero residual, solve reproduces",
        summary.join(", ")
    ))
}

// ---------------------------------------------------------------------------
// 4. Divergence certificates

fn divergence_certification() -> Outcome {
    let f = FieldSpec::new(5, 2, 256).unwrap();
    let horizon = 500;
    let half = Rational64::new(1, 2);
    let mus = |vm: i64| {
        (
            pi_times(&f, (2, 3), vm),
            pi_times(&f, (1, 7), if vm == 1 { 3 } else { 1 }),
        )
    };
    let radius = RadiusParams::new(f.clone(), 1, 1, half);

    let mut outside = Vec::new();
    for va in [-1i64, 1, 3] {
        for vm in [-1i64, 1, 3] {
            for vb in [-1i64, 1, 3] {
                let a = pi_times(&f, (3, 1), va) + &ExactScalar::pi_power(&f, va + 1);
                let b = pi_times(&f, (-2, 1), vb);
                outside.push((mus(vm), ConjugationParams::new(a, b, 2)));
            }
            let a = pi_times(&f, (3, 1), va);
            outside.push((
                mus(vm),
                ConjugationParams::new(a.clone(), ExactScalar::zero(&f), 2),
            ));
            outside.push((mus(vm), ConjugationParams::new(ExactScalar::zero(&f), a, 2)));
        }
    }
    let (mut div, mut ind) = (0, 0);
    for ((mu0, mu1), params) in &outside {
        if params.inside_t0r() {
            return Err("grid point unexpectedly inside".into());
        }
        let rep =
            certify_divergence([mu0, mu1], params, &radius, horizon).map_err(|e| e.to_string())?;
        match rep.verdict {
            Verdict::Diverges => div += 1,
            Verdict::Indeterminate => ind += 1,
            Verdict::Converges => {
                return Err(format!(
                    "Converges outside at a={} b={}",
                    params.a, params.b
                ));
            }
        }
    }
    if ind * 10 >= outside.len() {
        return Err(format!("Indeterminate on {ind}/{} points", outside.len()));
    }

    let mut inside = 0;
    for m in [0u32, 1] {
        for lambda in [half, Rational64::new(2, 3)] {
            let r = RadiusParams::new(f.clone(), 1, m, lambda);
            let expected =
                lambda * Rational64::from_integer(standard_kappa(5) as i64) - Rational64::new(1, 4);
            for vm in [-1i64, 1, 3] {
                let (mu0, mu1) = mus(vm);
                let x = pi_times(&f, (7, 3), 2 * (1 + m as i64));
                for params in [
                    ConjugationParams::new(x.clone(), ExactScalar::zero(&f), 1 + m),
                    ConjugationParams::new(ExactScalar::zero(&f), x.clone(), 1 + m),
                ] {
                    let rep = certify_divergence([&mu0, &mu1], &params, &r, horizon)
                        .map_err(|e| e.to_string())?;
                    if rep.verdict != Verdict::Converges || rep.certificate.slope != Some(expected)
                    {
                        return Err(format!(
                            "inside point {:?} m0+m={} lambda={lambda}: {} slope {:?}, want {expected}",
                            rep.case_tag,
                            1 + m,
                            rep.verdict,
                            rep.certificate.slope
                        ));
                    }
                    inside += 1;
                }
            }
        }
    }
    Ok(format!(
        "outside {}: {div} Diverges, {ind} Indeterminate; inside {inside}/{inside} Converges with exact slope",
        outside.len()
    ))
}

// ---------------------------------------------------------------------------
// 5. Characters

fn character_suite() -> Outcome {
    let mut rng = rng(5);
    let f = FieldSpec::qp(5, 40).unwrap();
    let digits = 20;
    let principal = |rng: &mut ChaCha8Rng| {
        let u: i64 = rng.gen_range(0..5i64.pow(12));
        PadicScalar::from_int(&f, 1 + 5 * u)
    };
    let exponent = |rng: &mut ChaCha8Rng| {
        let (r, s) = unit_ratio(rng, 5);
        PadicScalar::embed_rational(&f, r, s).unwrap()
    };
    let chi = |mu: &PadicScalar, x: &PadicScalar| {
        char_binomial(mu, x, None)
            .map(|c| c.value)
            .map_err(|e| e.to_string())
    };
    for i in 0..100 {
        let (x, y) = (principal(&mut rng), principal(&mut rng));
        let (mu, nu) = (exponent(&mut rng), exponent(&mut rng));
        let xy = x.clone() * &y;
        if !chi(&mu, &xy)?.agrees_to(&(chi(&mu, &x)? * &chi(&mu, &y)?), digits) {
            return Err(format!("multiplicativity fails at point {i}"));
        }
        let sum = mu.clone() + &nu;
        if !chi(&sum, &x)?.agrees_to(&(chi(&mu, &x)? * &chi(&nu, &x)?), digits) {
            return Err(format!("additivity fails at point {i}"));
        }
        let el = char_exp_log(&mu, &x).map_err(|e| e.to_string())?.value;
        if !chi(&mu, &x)?.agrees_to(&el, digits) {
            return Err(format!("binomial and exp-log disagree at point {i}"));
        }
    }
    for m in 0..=10u64 {
        for _ in 0..5 {
            let x = principal(&mut rng);
            let got = chi(&PadicScalar::from_int(&f, m as i64), &x)?;
            if !got.eq_to_precision(&x.pow(m)) {
                return Err(format!("chi_{m}(x) != x^{m}"));
            }
        }
    }
    Ok("100 points to 20 digits; x^m for m = 0..10".into())
}

// ---------------------------------------------------------------------------
// 6. Decompositions

fn decomposition_suite() -> Outcome {
    for p in [3u32, 5] {
        let all = enumerate_gl2(p, 1).map_err(|e| e.to_string())?;
        let pp = p as usize;
        if all.len() != (pp * pp - 1) * (pp * pp - pp) {
            return Err(format!("|GL_2(F_{p})| = {}", all.len()));
        }
        let iwahori = all.iter().filter(|g| g.entries()[1][0] == 0).count();
        if iwahori != (pp - 1) * (pp - 1) * pp {
            return Err(format!("|I| over F_{p} = {iwahori}"));
        }
        let mut counts = HashMap::new();
        for g in &all {
            let (cell, rep) = bruhat_decompose(g);
            if !rep.reconstructs() {
                return Err(format!(
                    "Bruhat factors do not reconstruct {:?}",
                    g.entries()
                ));
            }
            *counts.entry(cell).or_insert(0usize) += 1;
        }
        let one = counts.get(&BruhatCell::One).copied().unwrap_or(0);
        let w0 = counts.get(&BruhatCell::W0).copied().unwrap_or(0);
        if one != iwahori || w0 != pp * iwahori {
            return Err(format!(
                "F_{p}: cells {one} + {w0}, want {iwahori} + {}",
                pp * iwahori
            ));
        }
    }

    let mut rng = rng(6);
    for i in 0..1000 {
        let p = [3u32, 5, 7][rng.gen_range(0..3)];
        let level = rng.gen_range(1..=3);
        let m = (p as i64).pow(level);
        let unit = |rng: &mut ChaCha8Rng| loop {
            let x = rng.gen_range(1..m);
            if x % p as i64 != 0 {
                return x;
            }
        };
        let entries = [
            [unit(&mut rng), rng.gen_range(0..m)],
            [p as i64 * rng.gen_range(0..m / p as i64), unit(&mut rng)],
        ];
        let h = FiniteLevelMatrix::new(p, level, entries).map_err(|e| e.to_string())?;
        let rep = iwahori_factor(&h).map_err(|e| format!("{i}: {e}"))?;
        let [lo, t, up] = [
            rep.factors[0].entries(),
            rep.factors[1].entries(),
            rep.factors[2].entries(),
        ];
        let shapes = lo[0] == [1, 0]
            && lo[1][1] == 1
            && lo[1][0] % p as i64 == 0
            && t[0][1] == 0
            && t[1][0] == 0
            && up[0][0] == 1
            && up[1] == [0, 1];
        if !rep.reconstructs() || !shapes {
            return Err(format!("Iwahori round trip {i} fails for {entries:?}"));
        }
    }

    let f = FieldSpec::qp(5, 40).unwrap();
    if !mackey_cosets(&f, 4).iter().all(|c| c.round_trip) {
        return Err("Mackey coset representative does not round-trip".into());
    }
    let int_mat = |m: [[i64; 2]; 2]| -> Mat2<PadicScalar> { mat_from(&f, m) };
    let mut cartan = 0;
    for j in 0..=4i64 {
        for _ in 0..10 {
            let random_k = |rng: &mut ChaCha8Rng| loop {
                let m = [
                    [rng.gen_range(-50..50), rng.gen_range(-50..50)],
                    [rng.gen_range(-50..50), rng.gen_range(-50..50)],
                ];
                if (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % 5 != 0 {
                    return m;
                }
            };
            let scale = rng.gen_range(0..=2);
            let core = diag(
                &f,
                PadicScalar::pi_power(&f, scale),
                PadicScalar::pi_power(&f, scale + j),
            );
            let g = mat_mul(
                &mat_mul(&int_mat(random_k(&mut rng)), &core),
                &int_mat(random_k(&mut rng)),
            );
            let c = cartan_representative(&g).map_err(|e| e.to_string())?;
            if c.j != j || c.scale != scale || !c.reconstructs {
                return Err(format!(
                    "Cartan round trip: got j={} scale={}, want j={j} scale={scale}",
                    c.j, c.scale
                ));
            }
            cartan += 1;
        }
    }
    Ok(format!("Bruhat counts over F_3, F_5; 1000 Iwahori round trips; {cartan} Cartan round trips, j <= 4"))
}

// ---------------------------------------------------------------------------
// 7. H^0 vanishing and Ore witnesses

/// Normal ordering in U(sl_2) by rewriting adjacent pairs of a word in the
/// letters f < h < e: `hf -> fh - 2f`, `ef -> fe + h`, `eh -> he - 2e`.
struct WordOracle {
    memo: HashMap<Vec<u8>, BTreeMap<PbwMonomial, BigRational>>,
}

const F: u8 = 0;
const H: u8 = 1;
const E: u8 = 2;

impl WordOracle {
    fn new() -> Self {
        WordOracle {
            memo: HashMap::new(),
        }
    }

    fn normal(&mut self, w: &[u8]) -> BTreeMap<PbwMonomial, BigRational> {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let out = match (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            None => {
                let count = |l: u8| w.iter().filter(|&&x| x == l).count() as u32;
                BTreeMap::from([((count(F), count(H), count(E)), BigRational::one())])
            }
            Some(i) => {
                let rewrite: Vec<(Vec<u8>, i64)> = match (w[i], w[i + 1]) {
                    (H, F) => vec![(vec![F, H], 1), (vec![F], -2)],
                    (E, F) => vec![(vec![F, E], 1), (vec![H], 1)],
                    (E, H) => vec![(vec![H, E], 1), (vec![E], -2)],
                    _ => unreachable!(),
                };
                let mut acc = BTreeMap::new();
                for (mid, c) in rewrite {
                    let word: Vec<u8> = w[..i]
                        .iter()
                        .chain(&mid)
                        .chain(&w[i + 2..])
                        .copied()
                        .collect();
                    for (m, x) in self.normal(&word) {
                        *acc.entry(m).or_insert_with(BigRational::zero) +=
                            x * BigRational::from_integer(c.into());
                    }
                }
                acc.retain(|_, x| !x.is_zero());
                acc
            }
        };
        self.memo.insert(w.to_vec(), out.clone());
        out
    }

    fn product(&mut self, x: &Pbw, y: &Pbw) -> BTreeMap<PbwMonomial, BigRational> {
        let word = |&(a, b, c): &PbwMonomial| -> Vec<u8> {
            std::iter::repeat(F)
                .take(a as usize)
                .chain(std::iter::repeat(H).take(b as usize))
                .chain(std::iter::repeat(E).take(c as usize))
                .collect()
        };
        let mut acc = BTreeMap::new();
        for (mx, cx) in x.terms() {
            for (my, cy) in y.terms() {
                let w: Vec<u8> = word(mx).into_iter().chain(word(my)).collect();
                for (m, v) in self.normal(&w) {
                    *acc.entry(m).or_insert_with(BigRational::zero) += v * cx * cy;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }
}

fn h0_ore_suite() -> Outcome {
    let mut rng = rng(7);
    let f = FieldSpec::qp(5, 30).unwrap();
    let q = |r: (i64, i64)| ExactScalar::ratio(&f, r.0, r.1).unwrap();
    let mut conjugators: Vec<Mat2<ExactScalar>> = vec![mat_from(&f, [[1, 0], [0, 1]])];
    for x in [(5, 1), (1, 1), (25, 3), (-2, 7)] {
        conjugators.push(u_plus(&q(x)));
        conjugators.push(u_minus(&q(x)));
    }
    conjugators.push(mat_mul(&u_plus(&q((5, 1))), &u_minus(&q((5, 1)))));
    assert_eq!(conjugators.len(), 10);

    let mut cuspidal = 0;
    while cuspidal < 20 {
        let mu = [unit_ratio(&mut rng, 5), unit_ratio(&mut rng, 5)];
        let r = mu.map(|(n, d)| Rational64::new(n, d));
        if r.iter().any(|x| x.is_integer()) || (r[0] - r[1]).is_integer() {
            continue;
        }
        let spec = CuspidalModuleSpec::rational(f.clone(), &mu, 10)
            .unwrap()
            .shared();
        let rep = h0_vanishing_check(&spec, &conjugators, 10).map_err(|e| e.to_string())?;
        if !rep.passed() {
            return Err(format!("kernel for cuspidal mu = {mu:?}"));
        }
        cuspidal += 1;
    }
    for k in 0..10i64 {
        let int_mu = (k - 5, 1);
        let other = unit_ratio(&mut rng, 5);
        let other = if other.1 == 1 { (other.0, 3) } else { other };
        let mu = if k % 2 == 0 {
            [int_mu, other]
        } else {
            [other, int_mu]
        };
        let spec: Arc<CuspidalModuleSpec> = CuspidalModuleSpec::rational(f.clone(), &mu, 10)
            .unwrap()
            .shared();
        let rep = h0_vanishing_check(&spec, &conjugators, 10).map_err(|e| e.to_string())?;
        if !rep.kernel_found() {
            return Err(format!("no kernel for non-cuspidal mu = {mu:?}"));
        }
    }

    let mut oracle = WordOracle::new();
    let mut ore = 0;
    let mut max_k = 0;
    while ore < 20 {
        let lambda = unit_ratio(&mut rng, 1_000_003);
        let s = Pbw::e().scale(&BigRational::new(lambda.0.into(), lambda.1.into()));
        let mut delta = Pbw::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let deg = rng.gen_range(0..=4u32);
            let a = rng.gen_range(0..=deg);
            let b = rng.gen_range(0..=deg - a);
            let c: i64 = rng.gen_range(-5..=5);
            if c != 0 {
                delta.add_term((a, b, deg - a - b), BigRational::from_integer(c.into()));
            }
        }
        if delta.is_zero() {
            continue;
        }
        let w = ore_witness(&s, &delta).map_err(|e| e.to_string())?;
        let expected_s_prime =
            Pbw::e_pow(w.k).scale(&num_traits::pow(s.coefficient((0, 0, 1)), w.k as usize));
        if w.s_prime != expected_s_prime || !w.verified {
            return Err(format!("bad witness for delta = {delta}"));
        }
        if oracle.product(&s, &w.delta_prime) != oracle.product(&delta, &w.s_prime) {
            return Err(format!(
                "s delta' != delta s' by word rewriting, delta = {delta}"
            ));
        }
        max_k = max_k.max(w.k);
        ore += 1;
    }
    Ok(format!(
        "{cuspidal} cuspidal x {} conjugators pass; 10 non-cuspidal kernels; {ore} Ore witnesses (max k = {max_k})",
        conjugators.len()
    ))
}

// ---------------------------------------------------------------------------
// 8. Radius window

fn radius_validation() -> Outcome {
    // (p, e, κ, λ_s, violated conditions) worked out by hand, where
    // K: κ is not standard, A: λ_s <= 0, B: λ_s >= 1,
    // C: λ_s >= 1/e + 1/(p-1), D: κλ_s <= 1/(p-1).
    let table: [(u32, u32, u32, (i64, i64), &str); 31] = [
        (5, 1, 1, (1, 2), ""),
        (5, 1, 1, (1, 4), "D"),
        (5, 1, 1, (1, 1), "B"),
        (5, 1, 1, (99, 100), ""),
        (5, 2, 1, (1, 2), ""),
        (5, 2, 1, (3, 4), "C"),
        (5, 2, 1, (7, 10), ""),
        (5, 4, 1, (1, 2), "C"),
        (5, 4, 1, (3, 10), ""),
        (5, 1, 2, (1, 2), "K"),
        (3, 1, 1, (1, 2), "D"),
        (3, 1, 1, (3, 4), ""),
        (3, 2, 1, (3, 4), ""),
        (3, 2, 1, (1, 1), "BC"),
        (3, 3, 1, (5, 6), "C"),
        (3, 3, 1, (2, 3), ""),
        (2, 1, 2, (3, 4), ""),
        (2, 1, 2, (1, 2), "D"),
        (2, 1, 1, (3, 4), "KD"),
        (2, 2, 2, (3, 4), ""),
        (2, 1, 2, (1, 1), "B"),
        (7, 1, 1, (1, 6), "D"),
        (7, 1, 1, (1, 5), ""),
        (7, 6, 1, (1, 3), "C"),
        (7, 6, 1, (1, 4), ""),
        (5, 1, 1, (0, 1), "AD"),
        (5, 1, 1, (-1, 2), "AD"),
        (11, 1, 1, (1, 10), "D"),
        (11, 10, 1, (3, 20), ""),
        (13, 1, 1, (1, 2), ""),
        (3, 1, 1, (3, 2), "BC"),
    ];
    for (p, e, kappa, (n, d), want) in table {
        let mut params = RadiusParams::new(
            FieldSpec::new(p, e, 20).unwrap(),
            1,
            1,
            Rational64::new(n, d),
        );
        params.kappa = kappa;
        let got: String = match validate_radius(&params) {
            Ok(()) => String::new(),
            Err(v) => v
                .iter()
                .map(|x| match x {
                    RadiusViolation::KappaConvention { .. } => 'K',
                    RadiusViolation::NonPositiveExponent => 'A',
                    RadiusViolation::BelowInverseP => 'B',
                    RadiusViolation::BelowPiBound => 'C',
                    RadiusViolation::KappaPowerTooLarge => 'D',
                })
                .collect(),
        };
        if got != want {
            return Err(format!(
                "p={p} e={e} kappa={kappa} lambda={n}/{d}: got {got:?}, want {want:?}"
            ));
        }
    }
    let admitted = table.iter().filter(|t| t.4.is_empty()).count();
    Ok(format!(
        "{} tuples ({admitted} admissible), boundaries included",
        table.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("sl2 relation", Duration::from_secs(5), sl2_relation),
        (
            "cuspidality vs integrality",
            Duration::from_secs(5),
            cuspidality_grid,
        ),
        (
            "oracle equivalence",
            Duration::from_secs(60),
            oracle_equivalence,
        ),
        (
            "divergence certification",
            Duration::from_secs(120),
            divergence_certification,
        ),
        ("character suite", Duration::from_secs(10), character_suite),
        (
            "decomposition suite",
            Duration::from_secs(30),
            decomposition_suite,
        ),
        ("h0 and Ore suite", Duration::from_secs(60), h0_ore_suite),
        (
            "radius validation",
            Duration::from_secs(1),
            radius_validation,
        ),
    ];
    let only: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        if !only.is_empty() && !only.iter().any(|o| name.contains(o.as_str())) {
            continue;
        }
        let t = Instant::now();
        let outcome = run();
        let el = t.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if el <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget")),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] {} {name}: {detail} ({:.2}s / {}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            el.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
