use serde::Serialize;

use crate::error::ModelError;
use crate::model::choose2;

/// An instance `C(n, 2) = k*p + q` with `p >= n - 1`: `k` classes of `p` edges
/// and one class of `q` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionParams {
    pub n: usize,
    pub k: usize,
    pub p: usize,
    pub q: usize,
}

impl DivisionParams {
    pub fn new(n: usize, k: usize, p: usize, q: usize) -> Result<Self, ModelError> {
        let params = Self { n, k, p, q };
        params.check()?;
        Ok(params)
    }

    pub fn check(&self) -> Result<(), ModelError> {
        if self.k > 0 && self.p == 0 {
            return Err(ModelError::Params("classes of size p = 0 are empty".into()));
        }
        if self.p + 1 < self.n {
            return Err(ModelError::Params(format!(
                "p = {} < n - 1 = {}",
                self.p,
                self.n - 1
            )));
        }
        if self.k * self.p + self.q != choose2(self.n) {
            return Err(ModelError::Params(format!(
                "k*p + q = {} != C({}, 2) = {}",
                self.k * self.p + self.q,
                self.n,
                choose2(self.n)
            )));
        }
        Ok(())
    }

    /// Residual vertex count after removing `k` star pairs: `n - 2k`.
    pub fn reduced_n(&self) -> i64 {
        self.n as i64 - 2 * self.k as i64
    }

    /// Residual class size after removing `k` star pairs: `p - 2n + 2k + 1`.
    pub fn reduced_p(&self) -> i64 {
        self.p as i64 - 2 * self.n as i64 + 2 * self.k as i64 + 1
    }

    /// `n - 4k`.
    pub fn delta(&self) -> i64 {
        self.n as i64 - 4 * self.k as i64
    }
}

/// Bookkeeping for a balanced `k`-coloring of `K_n` once `n = 2k + i`:
/// `C(i, 2) = l*k + m`, there are `k - m` classes of `z` edges and `m` of `z + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedParams {
    pub n: usize,
    pub k: usize,
    pub i: usize,
    pub l: usize,
    pub m: usize,
    pub z: usize,
}

impl BalancedParams {
    /// Requires `2k <= n <= 4k` and `k >= 1`.
    pub fn new(n: usize, k: usize) -> Result<Self, ModelError> {
        if k == 0 || n < 2 * k || n > 4 * k {
            return Err(ModelError::Params(format!(
                "balanced bookkeeping needs 2k <= n <= 4k, got n={n}, k={k}"
            )));
        }
        let i = n - 2 * k;
        let l = choose2(i) / k;
        let m = choose2(i) % k;
        let z = 2 * k + 2 * i + l - 1;
        Ok(Self { n, k, i, l, m, z })
    }

    pub fn z_plus(&self) -> usize {
        self.z + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_checks() {
        assert!(DivisionParams::new(5, 2, 4, 2).is_ok());
        assert!(DivisionParams::new(5, 2, 3, 4).is_err());
        assert!(DivisionParams::new(5, 2, 4, 3).is_err());
        let p = DivisionParams::new(9, 1, 32, 4).unwrap();
        assert_eq!((p.reduced_n(), p.reduced_p(), p.delta()), (7, 17, 5));
    }

    #[test]
    fn balanced_class_count_identity() {
        for k in 1..30 {
            for n in 2 * k..=4 * k {
                let b = BalancedParams::new(n, k).unwrap();
                assert_eq!((k - b.m) * b.z + b.m * b.z_plus(), choose2(n), "n={n} k={k}");
            }
        }
    }
}
