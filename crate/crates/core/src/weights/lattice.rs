use std::fmt;

/// A point `ν` of the root lattice: integer coordinates summing to zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    /// Returns `None` unless the coordinates sum to zero.
    pub fn new(nu: Vec<i64>) -> Option<Self> {
        if nu.is_empty() || nu.iter().sum::<i64>() != 0 {
            return None;
        }
        Some(LatticePoint(nu))
    }

    pub fn origin(rank: usize) -> Self {
        LatticePoint(vec![0; rank + 1])
    }

    /// `ε_i - ε_j` in `rank + 1` coordinates.
    pub fn root(rank: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; rank + 1];
        v[i] += 1;
        v[j] -= 1;
        LatticePoint(v)
    }

    /// `k·α` for the simple root `α = ε_0 - ε_1` of `gl_2`.
    pub fn alpha_multiple(k: i64) -> Self {
        LatticePoint(vec![k, -k])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn shifted(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        v[j] -= 1;
        LatticePoint(v)
    }

    pub fn add(&self, other: &LatticePoint) -> Self {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> Self {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Max-norm; windows are balls for this norm.
    pub fn radius(&self) -> u64 {
        self.0.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn in_window(&self, radius: u32) -> bool {
        self.radius() <= radius as u64
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All lattice points of the window `max |ν_k| <= radius`, in lexicographic order.
pub fn window_points(rank: usize, radius: u32) -> Vec<LatticePoint> {
    let r = radius as i64;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rank + 1);
    fn rec(rank: usize, r: i64, cur: &mut Vec<i64>, out: &mut Vec<LatticePoint>) {
        if cur.len() == rank {
            let last = -cur.iter().sum::<i64>();
            if last.abs() <= r {
                let mut v = cur.clone();
                v.push(last);
                out.push(LatticePoint(v));
            }
            return;
        }
        for x in -r..=r {
            cur.push(x);
            rec(rank, r, cur, out);
            cur.pop();
        }
    }
    rec(rank, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_counts() {
        assert_eq!(window_points(1, 3).len(), 7);
        // rank 2, radius 1: hexagon plus centre
        assert_eq!(window_points(2, 1).len(), 7);
        assert!(window_points(2, 2)
            .iter()
            .all(|p| p.coords().iter().sum::<i64>() == 0));
    }

    #[test]
    fn rejects_off_lattice() {
        assert!(LatticePoint::new(vec![1, 0]).is_none());
        assert_eq!(LatticePoint::root(1, 0, 1), LatticePoint::alpha_multiple(1));
    }
}
