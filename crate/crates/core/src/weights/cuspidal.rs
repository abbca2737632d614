use std::collections::BTreeMap;

use super::{window_points, CuspidalModuleSpec, FiniteRep, LatticePoint, WeightError};
use crate::padic::ExactScalar;

#[derive(Clone, Debug, PartialEq)]
pub struct CuspidalityReport {
    pub cuspidal: bool,
    /// First root `(i, j)` (operator `t_i ∂/∂t_j`) with a vanishing multiplier.
    pub failing_root: Option<(usize, usize)>,
    pub failing_weight: Option<LatticePoint>,
}

/// Scan every root operator over the window for a vanishing multiplier
/// `μ_j + ν_j`, and cross-check against the integrality criterion.
pub fn check_cuspidality(spec: &CuspidalModuleSpec) -> Result<CuspidalityReport, WeightError> {
    let points = window_points(spec.n, spec.window_radius.max(1));
    let mut failing = None;
    'scan: for i in 0..=spec.n {
        for j in 0..=spec.n {
            if i == j {
                continue;
            }
            for nu in &points {
                let m = spec.mu[j].clone() + &ExactScalar::from_int(&spec.field, nu.coords()[j]);
                if m.is_zero() {
                    failing = Some(((i, j), nu.clone()));
                    break 'scan;
                }
            }
        }
    }
    let integral = spec.mu.iter().position(|m| m.is_integer());
    match (failing, integral) {
        (None, None) => Ok(CuspidalityReport {
            cuspidal: true,
            failing_root: None,
            failing_weight: None,
        }),
        (Some((root, nu)), Some(_)) => Ok(CuspidalityReport {
            cuspidal: false,
            failing_root: Some(root),
            failing_weight: Some(nu),
        }),
        (None, Some(index)) => Err(WeightError::WindowDisagreement {
            index,
            radius: spec.window_radius,
        }),
        (Some(_), None) => unreachable!("a vanishing multiplier forces an integral entry"),
    }
}

/// Common dimension of the weight spaces of `M^μ ⊗ Z` whose full preimage lies
/// in the window (`Z` trivial when `rep` is `None`).
pub fn degree(spec: &CuspidalModuleSpec, rep: Option<&FiniteRep>) -> Result<usize, WeightError> {
    if !check_cuspidality(spec)?.cuspidal {
        return Err(WeightError::NotCuspidal);
    }
    let trivial = vec![vec![0i64; spec.n + 1]];
    let weights = rep.map(|r| r.torus_weights()).unwrap_or(&trivial);
    if weights.iter().any(|w| w.len() != spec.n + 1) {
        return Err(WeightError::LengthMismatch {
            expected: spec.n + 1,
            got: weights[0].len(),
        });
    }
    // Shift each torus weight into the root-lattice coset of the first one.
    let base = &weights[0];
    let mut offsets = Vec::with_capacity(weights.len());
    for w in weights {
        let diff: Vec<i64> = w.iter().zip(base).map(|(a, b)| a - b).collect();
        offsets.push(LatticePoint::new(diff).ok_or_else(|| {
            WeightError::InvalidRep("torus weights of Z differ by a non-root-lattice vector".into())
        })?);
    }
    let mut dims: BTreeMap<LatticePoint, usize> = BTreeMap::new();
    let r = spec.window_radius;
    for nu in window_points(spec.n, r) {
        for off in &offsets {
            *dims.entry(nu.add(off)).or_default() += 1;
        }
    }
    // A weight is complete when every contribution ν = w - offset is in the window.
    let complete: Vec<usize> = dims
        .iter()
        .filter(|(w, _)| offsets.iter().all(|off| w.sub(off).in_window(r)))
        .map(|(_, &d)| d)
        .collect();
    let Some(&first) = complete.first() else {
        return Err(WeightError::EmptyWindow);
    };
    if complete.iter().any(|&d| d != first) {
        let mut distinct = complete.clone();
        distinct.sort_unstable();
        distinct.dedup();
        return Err(WeightError::NonConstantDegree(distinct));
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::FieldSpec;

    fn spec(mu: &[(i64, i64)], r: u32) -> CuspidalModuleSpec {
        CuspidalModuleSpec::rational(FieldSpec::qp(5, 20).unwrap(), mu, r).unwrap()
    }

    #[test]
    fn examples() {
        assert!(
            check_cuspidality(&spec(&[(1, 2), (1, 3)], 4))
                .unwrap()
                .cuspidal
        );
        let r = check_cuspidality(&spec(&[(1, 1), (1, 3)], 4)).unwrap();
        assert!(!r.cuspidal);
        assert_eq!(r.failing_root, Some((1, 0)));
        assert_eq!(r.failing_weight, LatticePoint::new(vec![-1, 1]));
        assert!(
            !check_cuspidality(&spec(&[(0, 1), (0, 1)], 4))
                .unwrap()
                .cuspidal
        );
    }

    #[test]
    fn small_window_disagreement_is_an_error() {
        let res = check_cuspidality(&spec(&[(7, 1), (1, 3)], 3));
        assert!(matches!(
            res,
            Err(WeightError::WindowDisagreement { index: 0, .. })
        ));
    }

    #[test]
    fn degrees() {
        let s = spec(&[(1, 2), (1, 3)], 4);
        assert_eq!(degree(&s, None).unwrap(), 1);
        let z = FiniteRep::symmetric_power_gl2(&s.field, 2).unwrap();
        assert_eq!(degree(&s, Some(&z)).unwrap(), 3);
        let tiny = spec(&[(1, 2), (1, 3)], 0);
        assert_eq!(degree(&tiny, Some(&z)), Err(WeightError::EmptyWindow));
    }
}
