//! Divergence certificates: a nonzero intertwiner series converging outside the
//! torus-adjacent region would contradict irreducibility.
//!
//! cargo run --release --example certify

use num_rational::Rational64;

use padic_cuspidal::analytic::{slope_string, RadiusParams};
use padic_cuspidal::irreducibility::{certify_divergence, ConjugationParams};
use padic_cuspidal::padic::{ExactScalar, FieldSpec};

fn main() {
    let f = FieldSpec::new(5, 2, 256).unwrap();
    let pq = |n, d, k| ExactScalar::ratio(&f, n, d).unwrap() * &ExactScalar::pi_power(&f, k);
    let mu = [pq(2, 3, -1), pq(1, 7, 1)];
    let radius = RadiusParams::new(f.clone(), 1, 1, Rational64::new(1, 2));
    let zero = ExactScalar::zero(&f);

    let points = [
        (
            "b = 0, val a = 1/2",
            ConjugationParams::new(pq(3, 1, 1), zero.clone(), 2),
        ),
        (
            "b = 0, val a = 2",
            ConjugationParams::new(pq(3, 1, 4), zero.clone(), 2),
        ),
        (
            "a = 0, val b = 3/2",
            ConjugationParams::new(zero.clone(), pq(-2, 1, 3), 2),
        ),
        (
            "a, b nonzero",
            ConjugationParams::new(pq(3, 1, 1), pq(-2, 1, 1), 2),
        ),
    ];
    for (label, params) in points {
        let rep = certify_divergence([&mu[0], &mu[1]], &params, &radius, 200).unwrap();
        println!(
            "{label:<20} inside T: {:<5} {:?}: {} (slope {}, {} seeds)",
            params.inside_t0r(),
            rep.case_tag,
            rep.verdict,
            slope_string(rep.certificate.slope),
            rep.per_seed.len()
        );
    }
}
