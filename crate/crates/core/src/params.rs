use crate::error::{Error, Result};

/// The pair `(n, k)` fixing both sides of the bijection.
///
/// The cycle has `2n` vertices `0..2n` and edges `{i, i + 1 mod 2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleParams {
    n: usize,
    k: usize,
}

impl CycleParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(CycleParams { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of vertices (and edges) of the cycle.
    pub fn cycle_len(&self) -> usize {
        2 * self.n
    }

    /// Number of `D` letters in a word.
    pub fn d_count(&self) -> usize {
        self.n - self.k
    }

    /// Word length `n + k`.
    pub fn word_len(&self) -> usize {
        self.n + self.k
    }

    /// Every `(n, k)` with `1 <= k <= n <= max_n`, ordered by `n` then `k`.
    pub fn grid(max_n: usize) -> impl Iterator<Item = CycleParams> {
        (1..=max_n).flat_map(|n| (1..=n).map(move |k| CycleParams { n, k }))
    }

    pub(crate) fn wrap(&self, v: usize) -> usize {
        v % self.cycle_len()
    }
}

impl std::fmt::Display for CycleParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={} k={}", self.n, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(CycleParams::new(0, 0).is_err());
        assert!(CycleParams::new(3, 0).is_err());
        assert_eq!(
            CycleParams::new(2, 3),
            Err(Error::InvalidParams { n: 2, k: 3 })
        );
        assert!(CycleParams::new(1, 1).is_ok());
    }

    #[test]
    fn grid_size() {
        assert_eq!(CycleParams::grid(7).count(), 28);
        assert_eq!(CycleParams::grid(3).count(), 6);
    }
}
