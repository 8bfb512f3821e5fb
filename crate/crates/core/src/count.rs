use num_bigint::BigUint;

use crate::enumerate::enumerate_subgraphs;
use crate::error::{Error, Result};
use crate::params::CycleParams;
use crate::subgraph::classify_subgraph;
use crate::Class;

/// Exact binomial coefficient; 0 when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigUint {
    if b < 0 || b as u64 > a {
        return BigUint::from(0u32);
    }
    let b = (b as u64).min(a - b as u64);
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    (0..b).fold(BigUint::from(1u32), |acc, i| acc * (a - i) / (i + 1))
}

/// `C(n+k-1, k-1) * C(n-1, k)`; zero when `k = n`.
pub fn count_w_star(params: CycleParams) -> BigUint {
    let (n, k) = (params.n() as u64, params.k() as i64);
    binomial(n + k as u64 - 1, k - 1) * binomial(n - 1, k)
}

/// `C(n+k, k) * C(n-1, k-1)`.
pub fn count_w_zero(params: CycleParams) -> BigUint {
    let (n, k) = (params.n() as u64, params.k() as i64);
    binomial(n + k as u64, k) * binomial(n - 1, k - 1)
}

/// Closed-form word counts, optionally paired with brute-force subgraph counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub params: CycleParams,
    pub w_star: BigUint,
    pub w_zero: BigUint,
    pub w_total: BigUint,
    pub g_star: Option<BigUint>,
    pub g_zero: Option<BigUint>,
    pub g_total: Option<BigUint>,
}

impl CountTable {
    pub fn closed_form(params: CycleParams) -> Self {
        let w_star = count_w_star(params);
        let w_zero = count_w_zero(params);
        CountTable {
            params,
            w_total: &w_star + &w_zero,
            w_star,
            w_zero,
            g_star: None,
            g_zero: None,
            g_total: None,
        }
    }

    /// Counts each subgraph class by exhaustive enumeration.
    pub fn fill_brute_force(&mut self) {
        let (mut star, mut zero) = (0usize, 0usize);
        for g in enumerate_subgraphs(self.params) {
            match classify_subgraph(&g) {
                Class::Star => star += 1,
                Class::Zero => zero += 1,
            }
        }
        self.g_star = Some(star.into());
        self.g_zero = Some(zero.into());
        self.g_total = Some((star + zero).into());
    }

    /// Checks the brute-force side (if filled) against the closed forms.
    pub fn check(&self) -> Result<()> {
        let mismatch = |detail: String| Error::CountMismatch {
            n: self.params.n(),
            k: self.params.k(),
            detail,
        };
        if self.w_total != &self.w_star + &self.w_zero {
            return Err(mismatch("w_total != w_star + w_zero".into()));
        }
        if let (Some(gs), Some(gz), Some(gt)) = (&self.g_star, &self.g_zero, &self.g_total) {
            if *gt != gs + gz {
                return Err(mismatch("g_total != g_star + g_zero".into()));
            }
            if *gs != self.w_star {
                return Err(mismatch(format!("g_star={gs} but w_star={}", self.w_star)));
            }
            if *gz != self.w_zero {
                return Err(mismatch(format!("g_zero={gz} but w_zero={}", self.w_zero)));
            }
        }
        Ok(())
    }
}

pub fn count_table(params: CycleParams, brute_force: bool) -> Result<CountTable> {
    let mut table = CountTable::closed_form(params);
    if brute_force {
        table.fill_brute_force();
    }
    table.check()?;
    Ok(table)
}
