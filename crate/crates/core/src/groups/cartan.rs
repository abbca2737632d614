use serde_json::json;

use super::GroupError;
use crate::irreducibility::{det, mat_inv, mat_mul, Mat2};
use crate::padic::{FieldSpec, PadicScalar};

/// `g = k_1 · π^m · diag(1, π^j) · k_2` with `k_1, k_2 ∈ GL_2(O)`.
#[derive(Clone, Debug)]
pub struct CartanDecomposition {
    /// Elementary-divisor gap, in powers of `π`.
    pub j: i64,
    /// Minimal entry valuation (the central part), in powers of `π`.
    pub scale: i64,
    pub k1: Mat2<PadicScalar>,
    pub k2: Mat2<PadicScalar>,
    /// `k_1 · diag(π^m, π^{m+j}) · k_2` equals the input to working precision.
    pub reconstructs: bool,
}

impl CartanDecomposition {
    pub fn to_json(&self) -> serde_json::Value {
        let m = |x: &Mat2<PadicScalar>| {
            json!(x.each_ref().map(|r| r.each_ref().map(|s| s.to_string())))
        };
        json!({ "j": self.j, "scale": self.scale, "k1": m(&self.k1), "k2": m(&self.k2), "reconstructs": self.reconstructs })
    }
}

fn pival(x: &PadicScalar) -> Result<i64, GroupError> {
    if x.is_precision_loss() {
        return Err(GroupError::Precision);
    }
    Ok(x.pi_valuation().unwrap_or(i64::MAX))
}

fn is_integral_unit_det(k: &Mat2<PadicScalar>) -> bool {
    let entries_ok = k
        .iter()
        .flatten()
        .all(|x| x.is_exact_zero() || x.pi_valuation().is_some_and(|v| v >= 0));
    entries_ok && det(k).pi_valuation() == Some(0)
}

pub fn diag(field: &FieldSpec, x: PadicScalar, y: PadicScalar) -> Mat2<PadicScalar> {
    [[x, PadicScalar::zero(field)], [PadicScalar::zero(field), y]]
}

fn swap() -> [[i64; 2]; 2] {
    [[0, 1], [1, 0]]
}

/// Elementary divisors of an invertible `2×2` matrix by min-valuation pivoting.
pub fn cartan_representative(g: &Mat2<PadicScalar>) -> Result<CartanDecomposition, GroupError> {
    let field = g[0][0].field().clone();
    let d = det(g);
    // Cancellation to the working precision is treated as singular.
    if d.is_zero() {
        return Err(GroupError::NotInvertible);
    }
    let vd = pival(&d)?;
    let mut best = (i64::MAX, 0, 0);
    for (r, row) in g.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            let v = pival(x)?;
            if v < best.0 {
                best = (v, r, c);
            }
        }
    }
    let (m, r, c) = best;
    let id = [[1, 0], [0, 1]];
    let p_row: Mat2<PadicScalar> =
        crate::irreducibility::mat_from(&field, if r == 1 { swap() } else { id });
    let q_col: Mat2<PadicScalar> =
        crate::irreducibility::mat_from(&field, if c == 1 { swap() } else { id });
    let h = mat_mul(&mat_mul(&p_row, g), &q_col);
    let x = h[0][0].clone();
    let one = PadicScalar::one(&field);
    let zero = PadicScalar::zero(&field);
    let l = [
        [one.clone(), zero.clone()],
        [-(h[1][0].checked_div(&x)?), one.clone()],
    ];
    let rr = [
        [one.clone(), -(h[0][1].checked_div(&x)?)],
        [zero.clone(), one.clone()],
    ];
    let y = det(&h).checked_div(&x)?;
    let vy = pival(&y)?;
    let j = vd - 2 * m;
    debug_assert_eq!(vy, m + j);
    let u0 = x.checked_div(&PadicScalar::pi_power(&field, m))?;
    let u1 = y.checked_div(&PadicScalar::pi_power(&field, vy))?;
    // g = P L^{-1} diag(u0, u1) diag(π^m, π^{m+j}) R^{-1} Q
    let k1 = mat_mul(
        &mat_mul(&p_row, &mat_inv(&l).map_err(|_| GroupError::NotInvertible)?),
        &diag(&field, u0, u1),
    );
    let k2 = mat_mul(
        &mat_inv(&rr).map_err(|_| GroupError::NotInvertible)?,
        &q_col,
    );
    let core = diag(
        &field,
        PadicScalar::pi_power(&field, m),
        PadicScalar::pi_power(&field, m + j),
    );
    let back = mat_mul(&mat_mul(&k1, &core), &k2);
    let reconstructs = back
        .iter()
        .flatten()
        .zip(g.iter().flatten())
        .all(|(a, b)| a.eq_to_precision(b))
        && is_integral_unit_det(&k1)
        && is_integral_unit_det(&k2);
    Ok(CartanDecomposition {
        j,
        scale: m,
        k1,
        k2,
        reconstructs,
    })
}

/// A representative `diag(1, π^j)` of `G_0 Z \ G / G_0 Z` and its round trip.
#[derive(Clone, Debug)]
pub struct MackeyCoset {
    pub j: u32,
    pub representative: Mat2<PadicScalar>,
    pub round_trip: bool,
}

impl MackeyCoset {
    pub fn label(&self) -> String {
        format!("diag(1, pi^{})", self.j)
    }
}

/// Double-coset representatives `diag(1, π^j)`, `0 <= j <= j_max`.
pub fn mackey_cosets(field: &FieldSpec, j_max: u32) -> Vec<MackeyCoset> {
    (0..=j_max)
        .map(|j| {
            let representative = diag(
                field,
                PadicScalar::one(field),
                PadicScalar::pi_power(field, j as i64),
            );
            let round_trip = cartan_representative(&representative)
                .is_ok_and(|c| c.j == j as i64 && c.reconstructs);
            MackeyCoset {
                j,
                representative,
                round_trip,
            }
        })
        .collect()
}
