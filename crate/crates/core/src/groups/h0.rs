use std::sync::Arc;

use serde_json::json;

use super::GroupError;
use crate::irreducibility::{ad_conjugate, e_mat, f_mat, Mat2};
use crate::linalg::rref;
use crate::padic::ExactScalar;
use crate::weights::{apply_gl2, window_points, CuspidalModuleSpec, LatticePoint, ModuleElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
}

impl Generator {
    fn matrix(self, field: &crate::padic::FieldSpec) -> Mat2<ExactScalar> {
        match self {
            Generator::E => e_mat(field),
            Generator::F => f_mat(field),
        }
    }
}

#[derive(Clone, Debug)]
pub struct H0Entry {
    pub conjugator: usize,
    pub generator: Generator,
    pub injective: bool,
    pub kernel_dim: usize,
    /// Weights of the free unknowns when a kernel exists.
    pub kernel_weights: Vec<LatticePoint>,
}

#[derive(Clone, Debug)]
pub struct H0Report {
    pub window: u32,
    pub entries: Vec<H0Entry>,
}

impl H0Report {
    /// Every conjugated generator acts injectively (vacuous for no conjugators).
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.injective)
    }

    pub fn kernel_found(&self) -> bool {
        !self.passed()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "window": self.window,
            "passed": self.passed(),
            "entries": self.entries.iter().map(|e| json!({
                "conjugator": e.conjugator,
                "generator": format!("{:?}", e.generator).to_lowercase(),
                "injective": e.injective,
                "kernel_dim": e.kernel_dim,
                "kernel_weights": e.kernel_weights.iter().map(|w| w.coords().to_vec()).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// For each conjugator `u` and generator `x ∈ {e, f}`, decide whether
/// `Ad(u^{-1})(x)` has a kernel among vectors supported strictly inside the
/// window of the given radius. The image of such a vector stays in the window,
/// so nothing escapes and the test is exact.
pub fn h0_vanishing_check(
    spec: &Arc<CuspidalModuleSpec>,
    conjugators: &[Mat2<ExactScalar>],
    window: u32,
) -> Result<H0Report, GroupError> {
    if spec.n != 1 {
        return Err(GroupError::NotGl2(spec.n));
    }
    if window < 1 {
        return Err(GroupError::WindowTooSmall(window));
    }
    let field = &spec.field;
    let domain = window_points(1, window - 1);
    let target = window_points(1, window);
    let row_of = |nu: &LatticePoint| target.binary_search(nu).expect("image stays in the window");
    let mut entries = Vec::new();
    for (ci, u) in conjugators.iter().enumerate() {
        for generator in [Generator::E, Generator::F] {
            let op =
                ad_conjugate(u, &generator.matrix(field)).map_err(|_| GroupError::NotInvertible)?;
            let zero = ExactScalar::zero(field);
            let mut rows = vec![vec![zero.clone(); domain.len() + 1]; target.len()];
            for (col, nu) in domain.iter().enumerate() {
                let mono = ModuleElement::monomial(spec, nu.clone(), ExactScalar::one(field));
                for (w, c) in apply_gl2(&mono, &op).terms() {
                    rows[row_of(w)][col] = c.clone();
                }
            }
            let sol = rref(rows, domain.len()).expect("homogeneous system is consistent");
            let free = sol.free_columns();
            entries.push(H0Entry {
                conjugator: ci,
                generator,
                injective: free.is_empty(),
                kernel_dim: free.len(),
                kernel_weights: free.iter().map(|&c| domain[c].clone()).collect(),
            });
        }
    }
    Ok(H0Report { window, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irreducibility::{mat_from, u_minus, u_plus};
    use crate::padic::FieldSpec;

    fn f() -> FieldSpec {
        FieldSpec::qp(5, 20).unwrap()
    }

    #[test]
    fn examples() {
        let id: Mat2<ExactScalar> = mat_from(&f(), [[1, 0], [0, 1]]);
        let cusp = CuspidalModuleSpec::rational(f(), &[(1, 2), (1, 3)], 6)
            .unwrap()
            .shared();
        let a = ExactScalar::ratio(&f(), 5, 3).unwrap();
        let r = h0_vanishing_check(&cusp, &[id.clone(), u_plus(&a), u_minus(&a)], 6).unwrap();
        assert!(r.passed());
        assert_eq!(r.entries.len(), 6);

        let non = CuspidalModuleSpec::rational(f(), &[(1, 1), (1, 3)], 6)
            .unwrap()
            .shared();
        let r = h0_vanishing_check(&non, &[id], 6).unwrap();
        let fe = r
            .entries
            .iter()
            .find(|e| e.generator == Generator::F)
            .unwrap();
        assert!(!fe.injective);
        assert_eq!(
            fe.kernel_weights,
            vec![LatticePoint::new(vec![-1, 1]).unwrap()]
        );
        assert!(
            r.entries
                .iter()
                .find(|e| e.generator == Generator::E)
                .unwrap()
                .injective
        );

        assert!(h0_vanishing_check(&cusp, &[], 6).unwrap().passed());
        assert!(h0_vanishing_check(&cusp, &[], 0).is_err());
    }
}
