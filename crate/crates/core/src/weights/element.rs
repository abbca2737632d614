use std::collections::BTreeMap;
use std::sync::Arc;

use super::{CuspidalModuleSpec, LatticePoint};
use crate::padic::Scalar;

/// A finite combination `Σ c_ν t^{μ+ν}`.
#[derive(Clone, Debug)]
pub struct ModuleElement<S> {
    spec: Arc<CuspidalModuleSpec>,
    mu: Arc<[S]>,
    coeffs: BTreeMap<LatticePoint, S>,
}

/// Result of an operator applied on a window: the part that stays inside and
/// the terms pushed across the boundary.
#[derive(Clone, Debug)]
pub struct Windowed<S> {
    pub inside: ModuleElement<S>,
    pub escaped: ModuleElement<S>,
}

impl<S: Scalar> ModuleElement<S> {
    pub fn zero(spec: &Arc<CuspidalModuleSpec>) -> Self {
        let mu: Vec<S> = spec.mu.iter().map(S::from_exact).collect();
        ModuleElement {
            spec: spec.clone(),
            mu: mu.into(),
            coeffs: BTreeMap::new(),
        }
    }

    fn empty_like(&self) -> Self {
        ModuleElement {
            spec: self.spec.clone(),
            mu: self.mu.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    pub fn monomial(spec: &Arc<CuspidalModuleSpec>, nu: LatticePoint, c: S) -> Self {
        let mut v = Self::zero(spec);
        v.add_term(nu, c);
        v
    }

    pub fn from_terms(
        spec: &Arc<CuspidalModuleSpec>,
        terms: impl IntoIterator<Item = (LatticePoint, S)>,
    ) -> Self {
        let mut v = Self::zero(spec);
        for (nu, c) in terms {
            v.add_term(nu, c);
        }
        v
    }

    pub fn spec(&self) -> &Arc<CuspidalModuleSpec> {
        &self.spec
    }

    /// Adds `c · t^{μ+ν}`; exact zeros are never stored.
    pub fn add_term(&mut self, nu: LatticePoint, c: S) {
        assert_eq!(nu.dim(), self.spec.n + 1, "lattice point has wrong rank");
        if c.is_exact_zero() {
            return;
        }
        match self.coeffs.remove(&nu) {
            None => {
                self.coeffs.insert(nu, c);
            }
            Some(old) => {
                let s = old + &c;
                if !s.is_exact_zero() {
                    self.coeffs.insert(nu, s);
                }
            }
        }
    }

    pub fn get(&self, nu: &LatticePoint) -> Option<&S> {
        self.coeffs.get(nu)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePoint, &S)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when every stored coefficient is zero (to precision).
    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|c| c.is_zero())
    }

    /// `λ_j = μ_j + ν_j`.
    pub fn weight_coord(&self, nu: &LatticePoint, j: usize) -> S {
        self.mu[j].clone() + &S::from_int_in(&self.spec.field, nu.coords()[j])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (nu, c) in &other.coeffs {
            out.add_term(nu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (nu, c) in &other.coeffs {
            out.add_term(nu.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = self.empty_like();
        for (nu, c) in &self.coeffs {
            out.add_term(nu.clone(), c.clone() * s);
        }
        out
    }

    /// Coefficientwise agreement, treating missing entries as zero.
    pub fn agrees(&self, other: &Self) -> bool {
        let zero = S::zero_in(&self.spec.field);
        self.coeffs.keys().chain(other.coeffs.keys()).all(|nu| {
            let a = self.coeffs.get(nu).unwrap_or(&zero);
            let b = other.coeffs.get(nu).unwrap_or(&zero);
            a.agrees(b)
        })
    }

    /// Split into the part supported in the window and the rest.
    pub fn split_window(&self, radius: u32) -> Windowed<S> {
        let mut inside = self.empty_like();
        let mut escaped = self.empty_like();
        for (nu, c) in &self.coeffs {
            let target = if nu.in_window(radius) {
                &mut inside
            } else {
                &mut escaped
            };
            target.coeffs.insert(nu.clone(), c.clone());
        }
        Windowed { inside, escaped }
    }
}

/// The operator `t_i ∂/∂t_j`: `t^λ ↦ λ_j t^{λ+ε_i-ε_j}`.
pub fn apply_root_operator<S: Scalar>(
    v: &ModuleElement<S>,
    i: usize,
    j: usize,
) -> ModuleElement<S> {
    assert!(
        i != j && i <= v.spec.n && j <= v.spec.n,
        "invalid root ({i}, {j})"
    );
    let mut out = v.empty_like();
    for (nu, c) in &v.coeffs {
        let m = v.weight_coord(nu, j);
        out.add_term(nu.shifted(i, j), c.clone() * &m);
    }
    out
}

/// [`apply_root_operator`] restricted to a window, with boundary-escaping
/// terms kept apart.
pub fn apply_root_operator_windowed<S: Scalar>(
    v: &ModuleElement<S>,
    i: usize,
    j: usize,
    radius: u32,
) -> Windowed<S> {
    apply_root_operator(v, i, j).split_window(radius)
}

/// The torus element `diag(x_0, …, x_n)`: `t^λ ↦ (Σ x_i λ_i) t^λ`.
pub fn apply_torus<S: Scalar>(v: &ModuleElement<S>, x: &[S]) -> ModuleElement<S> {
    assert_eq!(x.len(), v.spec.n + 1, "torus element has wrong length");
    let mut out = v.empty_like();
    for (nu, c) in &v.coeffs {
        let mut s = S::zero_in(&v.spec.field);
        for (k, xk) in x.iter().enumerate() {
            if !xk.is_exact_zero() {
                s = s + &(xk.clone() * &v.weight_coord(nu, k));
            }
        }
        out.add_term(nu.clone(), c.clone() * &s);
    }
    out
}

/// Action of a `gl_2` matrix `[[m00, m01], [m10, m11]] = m01·e + m10·f + diag(m00, m11)`.
pub fn apply_gl2<S: Scalar>(v: &ModuleElement<S>, m: &[[S; 2]; 2]) -> ModuleElement<S> {
    assert_eq!(v.spec.n, 1, "gl_2 action needs n = 1");
    let mut out = apply_torus(v, &[m[0][0].clone(), m[1][1].clone()]);
    if !m[0][1].is_exact_zero() {
        out = out.add(&apply_root_operator(v, 0, 1).scale(&m[0][1]));
    }
    if !m[1][0].is_exact_zero() {
        out = out.add(&apply_root_operator(v, 1, 0).scale(&m[1][0]));
    }
    out
}
