use crate::error::{Error, Result};
use crate::params::CycleParams;
use crate::word::{classify_word, Letter, Word};
use crate::Class;

/// Gap profile of a word.
///
/// `p_i` counts non-`U` letters between consecutive `U`s (with `p_0` before
/// the first and `p_k` after the last); `q_i` counts `D`s between consecutive
/// `R`s, with `q_0` one less than the number of `D`s before the first `R`.
///
/// Only the entries meaningful for the class are stored:
///
/// | class | `p`            | `q`            | sums               |
/// |-------|----------------|----------------|--------------------|
/// | Star  | `p_1 ..= p_k`  | `q_0 ..= q_k`  | `n`, `n - k - 1`   |
/// | Zero  | `p_0 ..= p_k`  | `q_1 ..= q_k`  | `n`, `n - k`       |
///
/// For star words `p_0` is always 0; for zero words `q_0` is always -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PqProfile {
    class: Class,
    p: Vec<usize>,
    q: Vec<usize>,
    params: CycleParams,
}

impl PqProfile {
    pub fn new(class: Class, params: CycleParams, p: Vec<usize>, q: Vec<usize>) -> Result<Self> {
        let (n, k) = (params.n(), params.k());
        let (p_len, q_len, q_sum) = match class {
            Class::Star => {
                if k == n {
                    return Err(Error::BadProfile(format!(
                        "star profile needs k < n (q must sum to n-k-1 = -1 at n=k={n})"
                    )));
                }
                (k, k + 1, n - k - 1)
            }
            Class::Zero => (k + 1, k, n - k),
        };
        if p.len() != p_len || q.len() != q_len {
            return Err(Error::BadProfile(format!(
                "{class} profile needs {p_len} p-values and {q_len} q-values, got {} and {}",
                p.len(),
                q.len()
            )));
        }
        let (ps, qs) = (p.iter().sum::<usize>(), q.iter().sum::<usize>());
        if ps != n || qs != q_sum {
            return Err(Error::BadProfile(format!(
                "{class} profile sums are {ps} and {qs}, expected {n} and {q_sum}"
            )));
        }
        Ok(PqProfile {
            class,
            p,
            q,
            params,
        })
    }

    pub fn star(params: CycleParams, p: Vec<usize>, q: Vec<usize>) -> Result<Self> {
        Self::new(Class::Star, params, p, q)
    }

    pub fn zero(params: CycleParams, p: Vec<usize>, q: Vec<usize>) -> Result<Self> {
        Self::new(Class::Zero, params, p, q)
    }

    pub(crate) fn new_unchecked(
        class: Class,
        params: CycleParams,
        p: Vec<usize>,
        q: Vec<usize>,
    ) -> Self {
        debug_assert!(Self::new(class, params, p.clone(), q.clone()).is_ok());
        PqProfile {
            class,
            p,
            q,
            params,
        }
    }

    pub fn class(&self) -> Class {
        self.class
    }

    pub fn params(&self) -> CycleParams {
        self.params
    }

    /// Stored p-values: `p_1..=p_k` (star) or `p_0..=p_k` (zero).
    pub fn p(&self) -> &[usize] {
        &self.p
    }

    /// Stored q-values: `q_0..=q_k` (star) or `q_1..=q_k` (zero).
    pub fn q(&self) -> &[usize] {
        &self.q
    }
}

/// Lengths of the maximal runs separated by `sep`, counting only letters
/// accepted by `keep`. Always returns `#sep + 1` entries.
fn run_lengths(letters: &[Letter], sep: Letter, keep: impl Fn(Letter) -> bool) -> Vec<usize> {
    let mut runs = vec![0];
    for &l in letters {
        if l == sep {
            runs.push(0);
        } else if keep(l) {
            *runs.last_mut().unwrap() += 1;
        }
    }
    runs
}

pub fn word_to_profile(w: &Word) -> PqProfile {
    let letters = w.letters();
    let mut p = run_lengths(letters, Letter::U, |l| l != Letter::U);
    // Ds between Rs: U letters are ignored entirely.
    let mut d_runs = run_lengths(letters, Letter::R, |l| l == Letter::D);
    let class = classify_word(w);
    match class {
        Class::Star => {
            debug_assert_eq!(p[0], 0);
            p.remove(0);
            d_runs[0] -= 1;
        }
        Class::Zero => {
            debug_assert_eq!(d_runs[0], 0);
            d_runs.remove(0);
        }
    }
    PqProfile::new_unchecked(class, w.params(), p, d_runs)
}

/// Rebuilds the unique word with the given profile.
pub fn profile_to_word(prof: &PqProfile) -> Word {
    let params = prof.params();
    let mut non_u = Vec::with_capacity(params.n());
    let d_runs = match prof.class() {
        Class::Star => {
            non_u.extend(std::iter::repeat_n(Letter::D, prof.q[0] + 1));
            &prof.q[1..]
        }
        Class::Zero => &prof.q[..],
    };
    for &d in d_runs {
        non_u.push(Letter::R);
        non_u.extend(std::iter::repeat_n(Letter::D, d));
    }

    // Star profiles omit p_0 = 0: the word starts with U.
    let (p0, rest) = match prof.class() {
        Class::Star => (0, &prof.p[..]),
        Class::Zero => (prof.p[0], &prof.p[1..]),
    };
    let mut source = non_u.into_iter();
    let mut letters = Vec::with_capacity(params.word_len());
    letters.extend(source.by_ref().take(p0));
    for &pm in rest {
        letters.push(Letter::U);
        letters.extend(source.by_ref().take(pm));
    }
    Word::new_unchecked(params, letters)
}
