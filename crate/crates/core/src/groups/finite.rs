use std::fmt;

use serde_json::json;

use super::GroupError;

/// A `2×2` matrix over `Z/p^k`, entries kept in `[0, p^k)`, with unit
/// determinant.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FiniteLevelMatrix {
    p: u32,
    level: u32,
    modulus: i64,
    entries: [[i64; 2]; 2],
}

fn modulus(p: u32, level: u32) -> Result<i64, GroupError> {
    if level == 0 {
        return Err(GroupError::InvalidLevel("level must be >= 1".into()));
    }
    if !crate::padic::is_prime(p) {
        return Err(GroupError::InvalidLevel(format!("{p} is not prime")));
    }
    (p as i64)
        .checked_pow(level)
        .filter(|m| *m < 1 << 31)
        .ok_or_else(|| GroupError::InvalidLevel(format!("{p}^{level} is too large")))
}

fn inv_mod(x: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (m, x.rem_euclid(m));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m))
}

impl FiniteLevelMatrix {
    pub fn new(p: u32, level: u32, entries: [[i64; 2]; 2]) -> Result<Self, GroupError> {
        let m = modulus(p, level)?;
        let entries = entries.map(|r| r.map(|x| x.rem_euclid(m)));
        let g = FiniteLevelMatrix {
            p,
            level,
            modulus: m,
            entries,
        };
        if g.det() % p as i64 == 0 {
            return Err(GroupError::NotInvertible);
        }
        Ok(g)
    }

    pub fn identity(p: u32, level: u32) -> Result<Self, GroupError> {
        Self::new(p, level, [[1, 0], [0, 1]])
    }

    /// The Weyl element `w₀ = [[0,1],[1,0]]`.
    pub fn w0(p: u32, level: u32) -> Result<Self, GroupError> {
        Self::new(p, level, [[0, 1], [1, 0]])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.entries
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.entries;
        (a * d - b * c).rem_euclid(self.modulus)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            (self.p, self.level),
            (other.p, other.level),
            "level mismatch"
        );
        let m = self.modulus;
        let x = &self.entries;
        let y = &other.entries;
        let e = |i: usize, j: usize| (x[i][0] * y[0][j] + x[i][1] * y[1][j]).rem_euclid(m);
        FiniteLevelMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            ..*self
        }
    }

    pub fn inverse(&self) -> Self {
        let m = self.modulus;
        let di = inv_mod(self.det(), m).expect("determinant is a unit");
        let [[a, b], [c, d]] = self.entries;
        let s = |x: i64| (x * di).rem_euclid(m);
        FiniteLevelMatrix {
            entries: [[s(d), s(-b)], [s(-c), s(a)]],
            ..*self
        }
    }

    /// Membership in the Iwahori subgroup: lower-left entry `≡ 0 mod p`.
    pub fn is_iwahori(&self) -> bool {
        self.entries[1][0] % self.p as i64 == 0
    }

    pub(crate) fn unit_inverse(&self, x: i64) -> Option<i64> {
        if x % self.p as i64 == 0 {
            return None;
        }
        inv_mod(x, self.modulus)
    }

    fn with(&self, entries: [[i64; 2]; 2]) -> Self {
        let m = self.modulus;
        FiniteLevelMatrix {
            entries: entries.map(|r| r.map(|x| x.rem_euclid(m))),
            ..*self
        }
    }

    /// Entries as decimal strings, row-major.
    pub fn to_json(&self) -> serde_json::Value {
        json!(self.entries.map(|r| r.map(|x| x.to_string())))
    }

    /// Parse `[["a","b"],["c","d"]]` (strings or integers).
    pub fn from_json(p: u32, level: u32, v: &serde_json::Value) -> Result<Self, GroupError> {
        let bad = |what: String| GroupError::Parse(what);
        let rows = v
            .as_array()
            .filter(|r| r.len() == 2)
            .ok_or_else(|| bad("expected 2 rows".into()))?;
        let mut out = [[0i64; 2]; 2];
        for (i, row) in rows.iter().enumerate() {
            let cols = row
                .as_array()
                .filter(|r| r.len() == 2)
                .ok_or_else(|| bad(format!("row {i}: expected 2 entries")))?;
            for (j, x) in cols.iter().enumerate() {
                out[i][j] = match x {
                    serde_json::Value::String(s) => s
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("entry ({i},{j}): not an integer: {s:?}")))?,
                    serde_json::Value::Number(n) => n
                        .as_i64()
                        .ok_or_else(|| bad(format!("entry ({i},{j}): not an integer")))?,
                    _ => return Err(bad(format!("entry ({i},{j}): expected a string"))),
                };
            }
        }
        Self::new(p, level, out)
    }
}

impl fmt::Debug for FiniteLevelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}^{}", self.entries, self.p, self.level)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    Bruhat,
    Iwahori,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BruhatCell {
    One,
    W0,
}

/// A factorization `input = factors[0] · factors[1] · …`.
#[derive(Clone, Debug)]
pub struct CosetReport {
    pub kind: DecompositionKind,
    pub input: FiniteLevelMatrix,
    pub representative: FiniteLevelMatrix,
    pub factors: Vec<FiniteLevelMatrix>,
    pub cell: String,
}

impl CosetReport {
    pub fn product(&self) -> FiniteLevelMatrix {
        let id = FiniteLevelMatrix {
            entries: [[1, 0], [0, 1]],
            ..self.input
        };
        self.factors.iter().fold(id, |acc, f| acc.mul(f))
    }

    pub fn reconstructs(&self) -> bool {
        self.product() == self.input
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": format!("{:?}", self.kind),
            "cell": self.cell,
            "representative": self.representative.to_json(),
            "factors": self.factors.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
            "reconstructs": self.reconstructs(),
        })
    }
}

/// `g = k_1 · w · k_2` with `k_1, k_2` Iwahori and `w ∈ {1, w₀}`.
pub fn bruhat_decompose(g: &FiniteLevelMatrix) -> (BruhatCell, CosetReport) {
    let [[a, b], [c, d]] = g.entries;
    let id = g.with([[1, 0], [0, 1]]);
    let (cell, factors) = match g.unit_inverse(c) {
        None => (BruhatCell::One, vec![*g, id, id]),
        Some(ci) => {
            let k1 = g.with([[1, a * ci], [0, 1]]);
            let k2 = g.with([[c, d], [0, b - a * d % g.modulus * ci]]);
            (BruhatCell::W0, vec![k1, g.with([[0, 1], [1, 0]]), k2])
        }
    };
    let report = CosetReport {
        kind: DecompositionKind::Bruhat,
        input: *g,
        representative: factors[1],
        factors,
        cell: match cell {
            BruhatCell::One => "1".into(),
            BruhatCell::W0 => "w0".into(),
        },
    };
    (cell, report)
}

/// `h = u⁻ · t · u⁺` for `h` in the Iwahori subgroup.
pub fn iwahori_factor(h: &FiniteLevelMatrix) -> Result<CosetReport, GroupError> {
    if !h.is_iwahori() {
        return Err(GroupError::NotIwahori);
    }
    let [[a, b], [c, d]] = h.entries;
    let m = h.modulus;
    let ai = h.unit_inverse(a).ok_or(GroupError::NotIwahori)?;
    let y = b * ai % m;
    let x = c * ai % m;
    let t1 = d - c * y % m;
    let u_minus = h.with([[1, 0], [x, 1]]);
    let t = h.with([[a, 0], [0, t1]]);
    let u_plus = h.with([[1, y], [0, 1]]);
    Ok(CosetReport {
        kind: DecompositionKind::Iwahori,
        input: *h,
        representative: t,
        factors: vec![u_minus, t, u_plus],
        cell: "I".into(),
    })
}

/// Every element of `GL_2(Z/p^k)`; only sensible for tiny `p^k`.
pub fn enumerate_gl2(p: u32, level: u32) -> Result<Vec<FiniteLevelMatrix>, GroupError> {
    let m = modulus(p, level)?;
    if m > 16 {
        return Err(GroupError::InvalidLevel(format!(
            "enumeration of GL_2(Z/{m}) is too large"
        )));
    }
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    if let Ok(g) = FiniteLevelMatrix::new(p, level, [[a, b], [c, d]]) {
                        out.push(g);
                    }
                }
            }
        }
    }
    Ok(out)
}
