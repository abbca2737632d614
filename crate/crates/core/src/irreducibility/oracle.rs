use std::sync::Arc;

use serde_json::json;

use super::{build_table, CaseTag, ConjugationParams, IntertwinerTable, IrredError, Seeds};
use crate::linalg::rref;
use crate::padic::{ExactScalar, FieldSpec, Scalar};
use crate::weights::{
    apply_root_operator, apply_torus, CuspidalModuleSpec, LatticePoint, ModuleElement,
};

/// Nonzero residual of the intertwiner equation at weight `μ + iα` for the
/// torus basis vector `x = diag(1,0)` (`basis = 0`) or `diag(0,1)` (`basis = 1`).
#[derive(Clone, Debug)]
pub struct ResidualEntry<S> {
    pub index: i64,
    pub basis: usize,
    pub value: S,
}

#[derive(Clone, Debug)]
pub struct ResidualReport<S> {
    pub window: u32,
    pub entries: Vec<ResidualEntry<S>>,
}

impl<S: Scalar> ResidualReport<S> {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sorted, deduplicated weight indices carrying a nonzero residual.
    pub fn nonzero_indices(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.entries.iter().map(|e| e.index).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "window": self.window,
            "zero": self.is_zero(),
            "nonzero_indices": self.nonzero_indices(),
        })
    }
}

fn gl2_spec(mu: &[ExactScalar; 2], radius: u32) -> Result<Arc<CuspidalModuleSpec>, IrredError> {
    Ok(CuspidalModuleSpec::new(mu[0].field().clone(), mu.to_vec(), radius)?.shared())
}

/// Scalars of the equation, converted into the backend once.
struct Operator<S> {
    a: S,
    bz: S,
    beta: S,
    mu: [S; 2],
}

impl<S: Scalar> Operator<S> {
    fn new(mu: &[ExactScalar; 2], params: &ConjugationParams) -> Self {
        let beta = &(&params.b * &params.b) * &params.a - &params.b;
        Operator {
            a: S::from_exact(&params.a),
            bz: S::from_exact(&params.b),
            beta: S::from_exact(&beta),
            mu: [S::from_exact(&mu[0]), S::from_exact(&mu[1])],
        }
    }

    /// `μ(x)v + α(x) a (b z + e) v − x v − α(x)(b²a − b) f v` for
    /// `x = diag(1,0)` or `diag(0,1)`.
    fn residual(&self, v: &ModuleElement<S>, basis: usize) -> ModuleElement<S> {
        let field = self.a.field().clone();
        let one = S::one_in(&field);
        let zero = S::zero_in(&field);
        let x = if basis == 0 {
            [one.clone(), zero.clone()]
        } else {
            [zero.clone(), one.clone()]
        };
        let alpha = if basis == 0 {
            one.clone()
        } else {
            -one.clone()
        };
        let mu_x = self.mu[basis].clone();

        let z = apply_torus(v, &[one.clone(), -one.clone()]);
        let e = apply_root_operator(v, 0, 1);
        let f = apply_root_operator(v, 1, 0);
        let inner = z.scale(&self.bz).add(&e);
        v.scale(&mu_x)
            .add(&inner.scale(&(alpha.clone() * &self.a)))
            .sub(&apply_torus(v, &x))
            .sub(&f.scale(&(alpha * &self.beta)))
    }
}

/// Truncation `Σ_{|i| <= extent} c_i t^{μ+iα}` of the table as a module element.
pub fn table_element<S: Scalar>(
    table: &IntertwinerTable<S>,
) -> Result<ModuleElement<S>, IrredError> {
    let spec = gl2_spec(&table.mu, table.extent + 1)?;
    Ok(ModuleElement::from_terms(
        &spec,
        table
            .entries()
            .map(|(i, c)| (LatticePoint::alpha_multiple(i), c.clone())),
    ))
}

/// Apply both sides of the intertwiner equation to the table, through the
/// module operators, and report the residual on weights `|i| <= window`.
pub fn verify_intertwiner_equation<S: Scalar>(
    table: &IntertwinerTable<S>,
    window: u32,
) -> Result<ResidualReport<S>, IrredError> {
    if window + 1 > table.extent {
        return Err(IrredError::WindowTooLarge {
            window,
            extent: table.extent,
        });
    }
    let v = table_element(table)?;
    let op = Operator::<S>::new(&table.mu, &table.params);
    let mut entries = Vec::new();
    for basis in 0..2 {
        let r = op.residual(&v, basis);
        for (nu, c) in r.terms() {
            let i = nu.coords()[0];
            if i.unsigned_abs() <= window as u64 && !c.is_zero() {
                entries.push(ResidualEntry {
                    index: i,
                    basis,
                    value: c.clone(),
                });
            }
        }
    }
    entries.sort_by_key(|e| (e.index, e.basis));
    Ok(ResidualReport { window, entries })
}

/// Outcome of solving the equation weight by weight as a linear system.
#[derive(Clone, Debug)]
pub struct LinearSolveReport {
    pub extent: u32,
    pub rank: usize,
    /// Indices left free by the system.
    pub free: Vec<i64>,
    /// Interior indices (`|i| < extent`) not fixed by the system.
    pub undetermined: Vec<i64>,
    /// Indices where the solution differs from the recurrence table.
    pub mismatches: Vec<i64>,
}

impl LinearSolveReport {
    /// The solve reproduces the table on every interior index.
    pub fn reproduces_table(&self) -> bool {
        self.undetermined.is_empty() && self.mismatches.is_empty()
    }
}

/// Unknowns `c_{-N..N}`; one equation per interior weight `|i| <= N-1` and
/// torus basis vector, plus pins for the seeds. The result is compared with
/// [`build_table`] on the same seeds.
pub fn linear_solve_table(
    mu: [&ExactScalar; 2],
    params: &ConjugationParams,
    seeds: &Seeds,
    extent: u32,
) -> Result<LinearSolveReport, IrredError> {
    let field: FieldSpec = mu[0].field().clone();
    let mu = [mu[0].clone(), mu[1].clone()];
    let n = extent as i64;
    let ncols = (2 * n + 1) as usize;
    let col = |i: i64| (i + n) as usize;
    let spec = gl2_spec(&mu, extent + 1)?;
    let op = Operator::<ExactScalar>::new(&mu, params);
    let zero = ExactScalar::zero(&field);

    // rows[(basis, i)] holds the coefficient of t^{μ+iα} in residual(t^{μ+jα}) at column j.
    let nrow_eq = 2 * (2 * n - 1).max(0) as usize;
    let mut rows = vec![vec![zero.clone(); ncols + 1]; nrow_eq];
    let row_of = |basis: usize, i: i64| basis * (2 * n - 1) as usize + (i + n - 1) as usize;
    for j in -n..=n {
        let mono = ModuleElement::monomial(
            &spec,
            LatticePoint::alpha_multiple(j),
            ExactScalar::one(&field),
        );
        for basis in 0..2 {
            for (nu, c) in op.residual(&mono, basis).terms() {
                let i = nu.coords()[0];
                if i.abs() < n {
                    rows[row_of(basis, i)][col(j)] = c.clone();
                }
            }
        }
    }
    let mut pin = |i: i64, v: &ExactScalar| {
        let mut row = vec![zero.clone(); ncols + 1];
        row[col(i)] = ExactScalar::one(&field);
        row[ncols] = v.clone();
        rows.push(row);
    };
    match params.case_tag() {
        CaseTag::Both => {
            pin(0, &seeds.c0);
            if n >= 1 {
                pin(-1, seeds.c_minus1.as_ref().unwrap_or(&zero));
            }
        }
        _ => pin(0, &seeds.c0),
    }
    let sol = rref(rows, ncols).map_err(|e| {
        IrredError::InconsistentSeeds(format!("linear system inconsistent at row {}", e.row))
    })?;
    let table: IntertwinerTable<ExactScalar> =
        build_table([&mu[0], &mu[1]], params, seeds, extent)?;
    let det = sol.determined();
    let mut undetermined = Vec::new();
    let mut mismatches = Vec::new();
    for i in -n..=n {
        match &det[col(i)] {
            Some(v) => {
                if v != table.get(i).expect("index in range") {
                    mismatches.push(i);
                }
            }
            None if i.abs() < n => undetermined.push(i),
            None => {}
        }
    }
    Ok(LinearSolveReport {
        extent,
        rank: sol.rank(),
        free: sol
            .free_columns()
            .into_iter()
            .map(|c| c as i64 - n)
            .collect(),
        undetermined,
        mismatches,
    })
}
