use std::collections::BTreeMap;

use super::WeightError;
use crate::padic::{ExactScalar, FieldSpec};

type Matrix = Vec<Vec<ExactScalar>>;

/// A finite-dimensional representation with diagonal torus action, given by
/// integer torus weights of a basis and matrices for some root vectors `e_ij`.
///
/// The provided generators must close under brackets; the commutation
/// relations are verified at construction.
#[derive(Clone, Debug)]
pub struct FiniteRep {
    field: FieldSpec,
    labels: Vec<String>,
    weights: Vec<Vec<i64>>,
    generators: BTreeMap<(usize, usize), Matrix>,
}

fn zero_matrix(field: &FieldSpec, d: usize) -> Matrix {
    vec![vec![ExactScalar::zero(field); d]; d]
}

fn matmul(field: &FieldSpec, a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let mut out = zero_matrix(field, d);
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].clone() + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn bracket(field: &FieldSpec, a: &Matrix, b: &Matrix) -> Matrix {
    let ab = matmul(field, a, b);
    let ba = matmul(field, b, a);
    ab.into_iter()
        .zip(ba)
        .map(|(r, s)| r.into_iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

impl FiniteRep {
    pub fn new(
        field: &FieldSpec,
        labels: Vec<String>,
        weights: Vec<Vec<i64>>,
        generators: BTreeMap<(usize, usize), Matrix>,
    ) -> Result<Self, WeightError> {
        let d = labels.len();
        if d == 0 || weights.len() != d {
            return Err(WeightError::InvalidRep(
                "need one torus weight per basis label".into(),
            ));
        }
        let rank1 = weights[0].len();
        if rank1 < 2 || weights.iter().any(|w| w.len() != rank1) {
            return Err(WeightError::InvalidRep(
                "torus weights must share a length >= 2".into(),
            ));
        }
        for (&(i, j), m) in &generators {
            if i == j || i >= rank1 || j >= rank1 {
                return Err(WeightError::InvalidRep(format!(
                    "generator e_{i}{j} is not a root vector"
                )));
            }
            if m.len() != d || m.iter().any(|r| r.len() != d) {
                return Err(WeightError::InvalidRep(format!(
                    "matrix of e_{i}{j} is not {d}x{d}"
                )));
            }
        }
        let rep = FiniteRep {
            field: field.clone(),
            labels,
            weights,
            generators,
        };
        rep.check_relations()?;
        Ok(rep)
    }

    /// The one-dimensional representation given by a character of the torus.
    pub fn character(field: &FieldSpec, lambda: Vec<i64>) -> Result<Self, WeightError> {
        Self::new(field, vec!["1".into()], vec![lambda], BTreeMap::new())
    }

    /// `Sym^k` of the standard representation of `gl_2`, basis `x^{k-j} y^j`.
    pub fn symmetric_power_gl2(field: &FieldSpec, k: u32) -> Result<Self, WeightError> {
        let d = k as usize + 1;
        let labels = (0..d).map(|j| format!("x^{}y^{}", d - 1 - j, j)).collect();
        let weights = (0..d as i64).map(|j| vec![k as i64 - j, j]).collect();
        let mut e = zero_matrix(field, d);
        let mut f = zero_matrix(field, d);
        for j in 0..d {
            // x ∂/∂y: x^{k-j} y^j -> j x^{k-j+1} y^{j-1}
            if j > 0 {
                e[j - 1][j] = ExactScalar::from_int(field, j as i64);
            }
            // y ∂/∂x: x^{k-j} y^j -> (k-j) x^{k-j-1} y^{j+1}
            if j + 1 < d {
                f[j + 1][j] = ExactScalar::from_int(field, (k as usize - j) as i64);
            }
        }
        let gens = BTreeMap::from([((0, 1), e), ((1, 0), f)]);
        Self::new(field, labels, weights, gens)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn torus_weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    fn diagonal(&self, k: usize) -> Matrix {
        let mut m = zero_matrix(&self.field, self.dim());
        for (r, w) in self.weights.iter().enumerate() {
            m[r][r] = ExactScalar::from_int(&self.field, w[k]);
        }
        m
    }

    fn generator(&self, i: usize, j: usize) -> Option<Matrix> {
        if i == j {
            Some(self.diagonal(i))
        } else {
            self.generators.get(&(i, j)).cloned()
        }
    }

    fn check_relations(&self) -> Result<(), WeightError> {
        let field = &self.field;
        let rank1 = self.weights[0].len();
        let d = self.dim();
        // Torus relations: e_ij shifts torus weights by ε_i - ε_j.
        for (&(i, j), m) in &self.generators {
            for r in 0..d {
                for c in 0..d {
                    if m[r][c].is_zero() {
                        continue;
                    }
                    let mut expect = self.weights[c].clone();
                    expect[i] += 1;
                    expect[j] -= 1;
                    if self.weights[r] != expect {
                        return Err(WeightError::InvalidRep(format!(
                            "e_{i}{j} does not shift weight {:?}",
                            self.weights[c]
                        )));
                    }
                }
            }
        }
        // [e_ij, e_kl] = δ_jk e_il - δ_li e_kj among the provided root vectors.
        let keys: Vec<_> = self.generators.keys().copied().collect();
        for &(i, j) in &keys {
            for &(k, l) in &keys {
                let lhs = bracket(field, &self.generators[&(i, j)], &self.generators[&(k, l)]);
                let mut rhs = zero_matrix(field, d);
                let add =
                    |m: Option<Matrix>, sign: i64, rhs: &mut Matrix| -> Result<(), WeightError> {
                        let m = m.ok_or_else(|| {
                            WeightError::InvalidRep(format!(
                                "generators not closed under [e_{i}{j}, e_{k}{l}]"
                            ))
                        })?;
                        let s = ExactScalar::from_int(field, sign);
                        for r in 0..d {
                            for c in 0..d {
                                rhs[r][c] = rhs[r][c].clone() + &(&m[r][c] * &s);
                            }
                        }
                        Ok(())
                    };
                if j == k {
                    add(self.generator(i, l), 1, &mut rhs)?;
                }
                if l == i {
                    add(self.generator(k, j), -1, &mut rhs)?;
                }
                if lhs != rhs {
                    return Err(WeightError::InvalidRep(format!(
                        "[e_{i}{j}, e_{k}{l}] relation fails"
                    )));
                }
            }
        }
        debug_assert!(rank1 >= 2);
        Ok(())
    }
}
